"""Command-line front door.

Subcommands: map (bijections in all directions), diagram (ASCII/JSON
rendering), count (pattern occurrences), check (avoidance via brute force
or the diagram criteria), table (closed forms and distributions), generate
(avoider enumeration), verify (the identity harness).  Exit codes: 0 on
success, 1 when verify finds a failing identity, 2 on usage or input
errors.  PERMDIAG_NMAX overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijection, diagram, dyck, enumeration, pattern, young
from .errors import PermdiagError
from .perm import parse_permutation
from .young import parse_partition


def _enum_cap(args) -> int:
    env = os.environ.get("PERMDIAG_NMAX")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PermdiagError(f"PERMDIAG_NMAX must be an integer, got {env!r}")
    return pattern.DEFAULT_ENUM_CAP


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_map(args) -> int:
    given = [name for name in ("perm", "path", "partition") if getattr(args, name)]
    if len(given) != 1:
        raise PermdiagError("map needs exactly one of --perm, --path, --partition")
    if args.perm:
        p = parse_permutation(args.perm)
        if args.inverse:
            image = bijection.phi_inverse(p)
            lam = diagram.dominant_partition(p)
            path = dyck.psi_k(p)
            payload = {
                "input": str(p),
                "direction": "phi_inverse",
                "image": str(image),
                "partition": str(lam),
                "path": str(path),
            }
        else:
            image = bijection.phi(p)
            lam = diagram.dominant_partition(image)
            path = dyck.psi_bjs(p)
            payload = {
                "input": str(p),
                "direction": "phi",
                "image": str(image),
                "partition": str(lam),
                "path": str(path),
            }
        text = "\n".join(
            (
                f"image: {payload['image']}",
                f"partition: {payload['partition']}",
                f"path: {payload['path']}",
            )
        )
        _emit(args, payload, text)
        return 0
    if args.path:
        path = dyck.make_path(args.path)
        p132 = dyck.psi_k_inverse(path)
        p321 = dyck.psi_bjs_inverse(path)
        lam = dyck.path_partition(path)
        payload = {
            "input": path.steps,
            "psi_k_inverse": str(p132),
            "psi_bjs_inverse": str(p321),
            "partition": str(lam),
        }
        text = "\n".join(
            (
                f"psi_k inverse (132-avoider): {p132}",
                f"psi_bjs inverse (321-avoider): {p321}",
                f"partition: {lam}",
            )
        )
        _emit(args, payload, text)
        return 0
    if args.n is None:
        raise PermdiagError("--partition needs --n")
    lam = parse_partition(args.partition)
    p = bijection.permutation_from_partition(lam, args.n)
    path = dyck.partition_path(lam, args.n)
    payload = {
        "input": str(lam),
        "n": args.n,
        "permutation": str(p),
        "path": path.steps,
    }
    text = "\n".join((f"permutation: {p}", f"path: {path}"))
    _emit(args, payload, text)
    return 0


def _cmd_diagram(args) -> int:
    p = parse_permutation(args.perm)
    payload = diagram.as_dict(p)
    text = diagram.render(p, show_ranks=args.ranks)
    _emit(args, payload, text)
    return 0


def _cmd_count(args) -> int:
    p = parse_permutation(args.perm)
    pat = parse_permutation(args.pattern)
    count = pattern.occurrences(p, pat)
    payload = {"perm": str(p), "pattern": str(pat), "occurrences": count}
    _emit(args, payload, str(count))
    return 0


def _cmd_check(args) -> int:
    p = parse_permutation(args.perm)
    pats = [parse_permutation(t) for t in args.pattern]
    if args.via == "diagram":
        verdicts = [pattern.avoids_by_diagram(p, pat) for pat in pats]
    else:
        verdicts = [pattern.avoids(p, pat) for pat in pats]
    ok = all(verdicts)
    payload = {
        "perm": str(p),
        "patterns": [str(pat) for pat in pats],
        "via": args.via,
        "avoids": ok,
    }
    _emit(args, payload, "avoids" if ok else "contains")
    return 0


def _cmd_table(args) -> int:
    if args.name and args.distribution:
        raise PermdiagError("table takes --name or --distribution, not both")
    if args.name:
        if args.k is not None:
            value = enumeration.closed_form(args.name, args.n, args.k)
            payload = {"name": args.name, "n": args.n, "k": args.k, "value": value}
            _emit(args, payload, str(value))
            return 0
        values = _closed_form_row(args.name, args.n)
        payload = {"name": args.name, "n": args.n, "values": values}
        text = "\n".join(f"k={k}: {v}" for k, v in values.items())
        if not values:
            text = str(enumeration.closed_form(args.name, args.n))
            payload["value"] = enumeration.closed_form(args.name, args.n)
        _emit(args, payload, text)
        return 0
    if args.distribution:
        avoid = [parse_permutation(t) for t in args.avoid] or [pattern.PATTERN_132]
        table = enumeration.distribution(
            args.n, avoid, args.distribution, cap=_enum_cap(args)
        )
        payload = {
            "statistic": args.distribution,
            "n": args.n,
            "avoid": [str(a) for a in avoid],
            "counts": {str(k): v for k, v in table.counts.items()},
            "total": table.total,
        }
        text = "\n".join(f"{k}: {v}" for k, v in table.counts.items())
        _emit(args, payload, text + f"\ntotal: {table.total}")
        return 0
    raise PermdiagError("table needs --name or --distribution")


def _closed_form_row(name: str, n: int) -> dict:
    key = name.replace("-", "_").lower()
    if key == "catalan":
        return {}
    if key == "narayana":
        return {k: enumeration.narayana(n, k) for k in range(1, n + 1)}
    if key == "ballot":
        return {k: enumeration.ballot(n, k) for k in range(n + 1)}
    if key in ("rank_count", "q_triangle"):
        fn = enumeration.rank_count if key == "rank_count" else enumeration.q_triangle
        return {k: fn(n, k) for k in range(n // 2 + 1)}
    raise PermdiagError(f"unknown closed form {name!r}")


def _cmd_generate(args) -> int:
    avoid = [parse_permutation(t) for t in args.avoid]
    if not avoid:
        raise PermdiagError("generate needs at least one --avoid pattern")
    cap = _enum_cap(args)
    out = []
    for i, p in enumerate(pattern.enumerate_avoiders(args.n, avoid, cap=cap)):
        if args.limit is not None and i >= args.limit:
            break
        out.append(str(p))
    payload = {
        "n": args.n,
        "avoid": [str(a) for a in avoid],
        "count": len(out),
        "permutations": out,
    }
    _emit(args, payload, "\n".join(out))
    return 0


def _cmd_verify(args) -> int:
    results = enumeration.verify_identities(args.n_max, names=args.identity or None)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"ok": ok, "results": enumeration.report_json(results)}, indent=2))
    else:
        print(enumeration.format_report(results))
        print(f"{'OK' if ok else 'FAIL'}: {sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permdiag",
        description="Diagram combinatorics of 132-avoiding permutations",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="apply the bijections in any direction")
    p_map.add_argument("--perm", help="permutation, e.g. '1 4 7 2 3 8 5 6 10 9'")
    p_map.add_argument("--path", help="Dyck path, e.g. 'UUDD'")
    p_map.add_argument("--partition", help="partition, e.g. '[3,1]'")
    p_map.add_argument("--n", type=int, help="ambient size for --partition")
    p_map.add_argument(
        "--inverse", action="store_true", help="apply phi inverse to a 132-avoider"
    )
    p_map.set_defaults(fn=_cmd_map)

    p_diag = sub.add_parser("diagram", help="render the Rothe diagram")
    p_diag.add_argument("--perm", required=True)
    p_diag.add_argument("--ranks", action="store_true", help="print cell ranks")
    p_diag.set_defaults(fn=_cmd_diagram)

    p_count = sub.add_parser("count", help="count pattern occurrences")
    p_count.add_argument("--perm", required=True)
    p_count.add_argument("--pattern", required=True)
    p_count.set_defaults(fn=_cmd_count)

    p_check = sub.add_parser("check", help="test pattern avoidance")
    p_check.add_argument("--perm", required=True)
    p_check.add_argument("--pattern", action="append", required=True)
    p_check.add_argument("--via", choices=("bruteforce", "diagram"), default="bruteforce")
    p_check.set_defaults(fn=_cmd_check)

    p_table = sub.add_parser("table", help="closed forms and distributions")
    p_table.add_argument(
        "--name",
        help="closed form: catalan, narayana, ballot, rank_count, q_triangle",
    )
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--k", type=int)
    p_table.add_argument(
        "--distribution",
        choices=enumeration.STATISTICS,
        help="statistic distribution over an avoidance class",
    )
    p_table.add_argument("--avoid", action="append", default=[])
    p_table.set_defaults(fn=_cmd_table)

    p_gen = sub.add_parser("generate", help="enumerate avoiders")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--avoid", action="append", default=[])
    p_gen.add_argument("--limit", type=int)
    p_gen.set_defaults(fn=_cmd_generate)

    p_verify = sub.add_parser("verify", help="run the identity harness")
    p_verify.add_argument("--n-max", type=int, default=7)
    p_verify.add_argument(
        "--identity", action="append", help="restrict to named identities"
    )
    p_verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PermdiagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
