"""Pattern containment, diagram avoidance criteria, and shifted-pattern maps.

The subsequence scan in :func:`occurrences` is the oracle everything else is
checked against: the diagram criteria (corner count, staircase containment,
corner diagonal bound, and the a/h machinery for cyclically shifted
patterns) must agree with it, and the exhaustive test suite verifies that
they do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from . import young
from .diagram import NotDominant, dominant_partition
from .errors import (
    BadArgumentError,
    DoesNotFitStaircaseError,
    Not132AvoidingError,
    PreconditionViolatedError,
    SizeTooLargeError,
)
from .perm import Permutation, make_permutation
from .young import Partition, conjugate, corners, fits_staircase, partition_from_corners

PATTERN_132 = Permutation((1, 3, 2))
PATTERN_321 = Permutation((3, 2, 1))

DEFAULT_ENUM_CAP = 11


def _rank_order(pattern: tuple[int, ...]) -> tuple[int, ...]:
    # positions of the pattern letters sorted by value; a subsequence is
    # order-isomorphic iff reading it in this order is strictly increasing
    return tuple(sorted(range(len(pattern)), key=lambda t: pattern[t]))


def _contains(values: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    k = len(pattern)
    if k > len(values):
        return False
    order = _rank_order(pattern)
    for sub in itertools.combinations(values, k):
        prev = sub[order[0]]
        for t in range(1, k):
            cur = sub[order[t]]
            if cur < prev:
                break
            prev = cur
        else:
            return True
    return False


def occurrences(p: Permutation, pattern: Permutation) -> int:
    """Number of subsequences of p order-isomorphic to ``pattern``.

    Exhaustive scan over all size-k subsequences; this is the brute-force
    oracle, deliberately free of shortcuts.
    """
    k = pattern.n
    if k > p.n:
        return 0
    order = _rank_order(pattern.values)
    count = 0
    for sub in itertools.combinations(p.values, k):
        prev = sub[order[0]]
        for t in range(1, k):
            cur = sub[order[t]]
            if cur < prev:
                break
            prev = cur
        else:
            count += 1
    return count


def avoids(p: Permutation, patterns: Permutation | Iterable[Permutation]) -> bool:
    """Whether p contains no occurrence of any of the given patterns."""
    if isinstance(patterns, Permutation):
        patterns = (patterns,)
    return not any(_contains(p.values, pat.values) for pat in patterns)


def enumerate_avoiders(
    n: int,
    patterns: Permutation | Iterable[Permutation],
    cap: int | None = None,
) -> Iterator[Permutation]:
    """All permutations in S_n avoiding every given pattern, by filtering S_n.

    ``n`` above the cap (default ``DEFAULT_ENUM_CAP``) raises
    :class:`SizeTooLargeError`; pass ``cap`` explicitly to go further.
    """
    if n < 1:
        raise BadArgumentError("n must be at least 1")
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise SizeTooLargeError(f"n={n} exceeds the enumeration cap {limit}")
    if isinstance(patterns, Permutation):
        patterns = (patterns,)
    pats = tuple(pat.values for pat in patterns)
    for vals in itertools.permutations(range(1, n + 1)):
        if not any(_contains(vals, pat) for pat in pats):
            yield Permutation(vals)


# ---------------------------------------------------------------------------
# diagram characterizations of multi-pattern avoidance


def _dominant_or_raise(p: Permutation) -> Partition:
    lam = dominant_partition(p)
    if isinstance(lam, NotDominant):
        raise Not132AvoidingError(
            f"'{p}' contains 132 (diagram cell {lam.witness} is disconnected)"
        )
    return lam


def diagram_avoidance_check(p: Permutation, k: int, kind: str) -> bool:
    """Avoidance of the length-k companion pattern read off the diagram of p.

    For a 132-avoiding p with diagram shape lambda:

    - ``decreasing``:    p avoids k(k-1)...1  iff lambda has at most k-2 corners
    - ``increasing``:    p avoids 12...k      iff lambda contains the staircase
      (n+1-k, n-k, ..., 1)
    - ``two_one_three``: p avoids 213...k     iff every corner (i, j) satisfies
      i + j >= n + 3 - k
    """
    if k < 3:
        raise BadArgumentError("k must be at least 3")
    lam = _dominant_or_raise(p)
    n = p.n
    if kind == "decreasing":
        return len(corners(lam)) <= k - 2
    if kind == "increasing":
        needed = (
            Partition(tuple(range(n + 1 - k, 0, -1))) if n + 1 - k > 0 else young.EMPTY
        )
        return young.contains(lam, needed)
    if kind == "two_one_three":
        return all(i + j >= n + 3 - k for (i, j) in corners(lam))
    raise BadArgumentError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# the a/b/h machinery for shifted patterns


@dataclass(frozen=True)
class ABHProfile:
    """Row and column slack sequences of a 132-avoider's diagram.

    With lambda = shape of D(p) (l positive parts) and lambda' its conjugate:
    ``a[i-1] = n - (i + lambda_i)`` for i = 1..l, ``a_bar`` extends this over
    i = 1..n-1 with zero padding of lambda, and ``b[j-1] = n - (j +
    lambda'_j)`` for j = 1..lambda_1.  ``h[i-1]`` is the length of the
    longest strictly increasing subsequence of b_{lambda_i}, ..., b_1 that
    starts with b_{lambda_i}.
    """

    shape: Partition
    a: tuple[int, ...]
    a_bar: tuple[int, ...]
    b: tuple[int, ...]
    h: tuple[int, ...]


def _abh_parts(lam: Partition, n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    parts = lam.parts
    conj = conjugate(lam).parts
    a = tuple(n - (i + parts[i - 1]) for i in range(1, len(parts) + 1))
    b = tuple(n - (j + conj[j - 1]) for j in range(1, len(conj) + 1))
    h = []
    for i in range(1, len(parts) + 1):
        seq = b[: parts[i - 1]][::-1]  # b_{lambda_i}, b_{lambda_i - 1}, ..., b_1
        # longest strictly increasing subsequence anchored at seq[0]
        best = [0] * len(seq)
        best[0] = 1
        for t in range(1, len(seq)):
            if seq[t] > seq[0]:
                best[t] = 1 + max(
                    (best[u] for u in range(t) if best[u] and seq[u] < seq[t]),
                    default=0,
                )
        h.append(max(best))
    return a, b, tuple(h)


def abh_profile(p: Permutation) -> ABHProfile:
    """The a, a_bar, b, h sequences of a 132-avoiding permutation."""
    lam = _dominant_or_raise(p)
    n = p.n
    a, b, h = _abh_parts(lam, n)
    a_bar = tuple(n - i - lam.part(i) for i in range(1, n))
    return ABHProfile(shape=lam, a=a, a_bar=a_bar, b=b, h=h)


@dataclass(frozen=True)
class ShiftedProfile:
    """l_s values and the partition L = (l_2 - 1, l_3 - 2, ...).

    ``l_values[s]`` is the largest l such that p contains the shifted
    pattern s(s+1)...l 1 2...(s-1), with the convention l_s = s - 1 when no
    such pattern occurs.
    """

    l_values: dict[int, int]
    L: Partition


def _tall_chain_lengths(a: tuple[int, ...], h: tuple[int, ...]) -> list[int]:
    # ending[i] = longest strictly decreasing subsequence of a ending at i
    m = len(a)
    ending = [1] * m
    for i in range(m):
        for j in range(i):
            if a[j] > a[i] and ending[j] + 1 > ending[i]:
                ending[i] = ending[j] + 1
    return ending


def _l_s_from_parts(a, h, s: int) -> int:
    ending = _tall_chain_lengths(a, h)
    best = max((ending[i] for i in range(len(a)) if h[i] >= s - 1), default=0)
    return s - 1 + best


def shifted_pattern(s: int, l: int) -> Permutation:
    """The pattern s(s+1)...l 1 2...(s-1)."""
    if not (2 <= s <= l):
        raise BadArgumentError(f"need 2 <= s <= l, got s={s}, l={l}")
    return make_permutation(tuple(range(s, l + 1)) + tuple(range(1, s)))


def shifted_profile(p: Permutation) -> ShiftedProfile:
    """l_s for s = 2..n, computed from the diagram via the a/h criterion.

    A strictly decreasing subsequence of a(p) whose last element has height
    at least s - 1 and length m witnesses the shifted pattern of length
    s - 1 + m; the longest such chain therefore gives l_s exactly.
    """
    profile = abh_profile(p)
    a, h = profile.a, profile.h
    ending = _tall_chain_lengths(a, h)
    l_values: dict[int, int] = {}
    for s in range(2, p.n + 1):
        best = max((ending[i] for i in range(len(a)) if h[i] >= s - 1), default=0)
        l_values[s] = s - 1 + best
    L = Partition(tuple(l_values[s] - (s - 1) for s in sorted(l_values)))
    return ShiftedProfile(l_values=l_values, L=L)


def classify_special(pattern: Permutation) -> tuple | None:
    """Recognize patterns with a diagram-side avoidance criterion.

    Returns ``("decreasing", k)``, ``("increasing", k)``,
    ``("two_one_three", k)``, ``("shifted", s, k)`` or None.
    """
    vals = pattern.values
    k = len(vals)
    if k >= 3 and vals == tuple(range(k, 0, -1)):
        return ("decreasing", k)
    if k >= 3 and vals == tuple(range(1, k + 1)):
        return ("increasing", k)
    if k >= 3 and vals == (2, 1) + tuple(range(3, k + 1)):
        return ("two_one_three", k)
    for s in range(2, k + 1):
        if vals == tuple(range(s, k + 1)) + tuple(range(1, s)):
            return ("shifted", s, k)
    return None


def avoids_by_diagram(p: Permutation, pattern: Permutation) -> bool:
    """Avoidance of ``pattern`` decided from the diagram of a 132-avoider.

    Supports the decreasing, increasing, 213...k and shifted families;
    anything else raises :class:`BadArgumentError`.
    """
    kind = classify_special(pattern)
    if kind is None:
        raise BadArgumentError(f"no diagram criterion for pattern '{pattern}'")
    if kind[0] == "shifted":
        _, s, k = kind
        profile = abh_profile(p)
        return _l_s_from_parts(profile.a, profile.h, s) < k
    return diagram_avoidance_check(p, kind[1], kind[0])


# ---------------------------------------------------------------------------
# corner bijection for 12...k vs 213...k (staircase union)


def staircase_union_map(d: Partition, n: int, k: int) -> Partition:
    """Keep exactly the corners (i, j) with i + j >= n + 3 - k.

    Defined on partitions in Y_n containing the staircase (n+1-k, ..., 1);
    inverse of :func:`staircase_union_map_inverse`.
    """
    _check_union_args(d, n, k)
    stair = _inner_staircase(n, k)
    if not young.contains(d, stair):
        raise PreconditionViolatedError(f"{d} does not contain {stair}")
    kept = tuple(c for c in corners(d) if c[0] + c[1] >= n + 3 - k)
    return partition_from_corners(kept)


def staircase_union_map_inverse(d: Partition, n: int, k: int) -> Partition:
    """Union with the staircase (n+1-k, ..., 1), restoring the dropped corners."""
    _check_union_args(d, n, k)
    if any(i + j < n + 3 - k for (i, j) in corners(d)):
        raise PreconditionViolatedError(f"{d} has a corner below the i+j >= {n + 3 - k} line")
    stair = _inner_staircase(n, k)
    rows = max(len(d.parts), len(stair.parts))
    return Partition(tuple(max(d.part(i), stair.part(i)) for i in range(1, rows + 1)))


def _check_union_args(d: Partition, n: int, k: int) -> None:
    if k < 3:
        raise BadArgumentError("k must be at least 3")
    if not fits_staircase(d, n):
        raise DoesNotFitStaircaseError(f"{d} does not fit in Y_{n}")


def _inner_staircase(n: int, k: int) -> Partition:
    return Partition(tuple(range(n + 1 - k, 0, -1))) if n + 1 - k > 0 else young.EMPTY


# ---------------------------------------------------------------------------
# the longest-increasing-run to l_s transport on Y_n


def _l_value(lam: Partition, n: int) -> int:
    """Longest increasing run of the 132-avoider with diagram lambda."""
    return max(n + 1 - i - lam.part(i) for i in range(1, n + 1))


def _l_s_of_partition(lam: Partition, n: int, s: int) -> int:
    a, _, h = _abh_parts(lam, n)
    return _l_s_from_parts(a, h, s)


def _map_s2(lam: Partition, n: int) -> Partition:
    # rows not touching the antidiagonal grow by one; the rest disappear
    return Partition(
        tuple(lam.part(i) + 1 for i in range(1, n) if lam.part(i) + i < n)
    )


def _map_s2_inverse(mu: Partition, n: int) -> Partition:
    lhat = [v - 1 for v in mu.parts]
    for _ in range((n - 1) - len(mu.parts)):
        j = next(
            (idx for idx in range(len(lhat), 0, -1) if lhat[idx - 1] + idx >= n - 1),
            0,
        )
        lhat.insert(j, n - 1 - j)
    return Partition(tuple(lhat))


def _muhat(lam: Partition, n: int, s: int) -> list[int]:
    out = []
    for i in range(1, n):
        li = lam.part(i)
        if i <= n + 1 - s:
            if li + i < n + 2 - s:
                out.append(li + s - 1)
            else:
                out.append(li + i - (n + 2 - s))
        else:
            out.append(li)
    return out


def _interchange_pass(seq: list[int], s: int) -> list[int]:
    # bubble entries >= s-1 leftward past smaller ones, incrementing each
    # time they hop a positive entry
    out = list(seq)
    guard = len(out) ** 2 + len(out) + 1
    while guard:
        for i in range(len(out) - 1):
            if out[i] < s - 1 <= out[i + 1]:
                if out[i] > 0:
                    out[i + 1] += 1
                out[i], out[i + 1] = out[i + 1], out[i]
                break
        else:
            return out
        guard -= 1
    raise AssertionError("interchange pass did not terminate")


def _is_weakly_decreasing(seq: list[int]) -> bool:
    return all(x >= y for x, y in zip(seq, seq[1:]))


def _recovery(seq: list[int], n: int, s: int) -> Partition | None:
    # undo the interchange pass: slide small entries back right while the
    # extracted row lengths are out of order
    block1 = list(seq[: n + 1 - s])
    block2 = list(seq[n + 1 - s :])
    guard = len(block1) ** 2 + len(block1) + 1
    while guard:
        lhat = [
            (v + 1 - s) if v >= s - 1 else (v - (i + 1) + n + 2 - s)
            for i, v in enumerate(block1)
        ]
        viol = next((i for i in range(len(lhat) - 1) if lhat[i] < lhat[i + 1]), None)
        if viol is None:
            if any(x < 0 for x in lhat):
                return None
            try:
                return Partition(tuple(lhat + block2))
            except BadArgumentError:
                return None
        if block1[viol + 1] > 0:
            block1[viol] -= 1
        block1[viol], block1[viol + 1] = block1[viol + 1], block1[viol]
        guard -= 1
    return None


@lru_cache(maxsize=None)
def _fix_tables(n: int, s: int) -> tuple[dict, dict]:
    """Pair the pass outputs that fail to be partitions with their targets.

    The construction of the transport map leaves a residue of shapes whose
    tail would need reordering; they are matched, within each value of the
    transported statistic, to the partitions not reached by the procedural
    branches (lexicographically on both sides).  The match is validated by
    the exhaustive bijectivity tests.
    """
    fwd: dict[tuple, tuple] = {}
    leftover: list[tuple[int, tuple]] = []
    everything = []
    for lam in young.staircase_partitions(n):
        everything.append(lam)
        l = _l_value(lam, n)
        if l <= s - 1:
            fwd[lam.parts] = conjugate(_map_s2(lam, n)).parts
            continue
        after = _interchange_pass(_muhat(lam, n, s), s)
        if _is_weakly_decreasing(after):
            fwd[lam.parts] = Partition(tuple(after)).parts
        else:
            leftover.append((l, lam.parts))
    used = set(fwd.values())
    unused: dict[int, list[tuple]] = {}
    for mu in everything:
        if mu.parts not in used:
            unused.setdefault(_l_s_of_partition(mu, n, s), []).append(mu.parts)
    fix_fwd: dict[tuple, tuple] = {}
    by_l: dict[int, list[tuple]] = {}
    for l, parts in sorted(leftover):
        by_l.setdefault(l, []).append(parts)
    for l, lams in by_l.items():
        targets = sorted(unused.get(l, []))
        if len(targets) != len(lams):
            raise AssertionError(f"transport classes out of balance at n={n}, s={s}, l={l}")
        for parts, target in zip(sorted(lams), targets):
            fix_fwd[parts] = target
    fix_inv = {v: k for k, v in fix_fwd.items()}
    return fix_fwd, fix_inv


def mu_map(lam: Partition, n: int, s: int) -> Partition:
    """Bijection on Y_n carrying the longest increasing run l to l_s.

    The image partition's permutation satisfies l_s = l when l >= s, and
    l_s = s - 1 when l <= s - 1.  For s = 2 this is the antidiagonal
    row-growth map; for s >= 3 the three-case construction with the
    interchange pass, falling back to the matched residue (see
    :func:`_fix_tables`) when the pass output is not a partition.
    """
    _check_mu_args(lam, n, s)
    if s == 2:
        return _map_s2(lam, n)
    if _l_value(lam, n) <= s - 1:
        return conjugate(_map_s2(lam, n))
    after = _interchange_pass(_muhat(lam, n, s), s)
    if _is_weakly_decreasing(after):
        return Partition(tuple(after))
    fix_fwd, _ = _fix_tables(n, s)
    return Partition(fix_fwd[lam.parts])


def mu_map_inverse(mu: Partition, n: int, s: int) -> Partition:
    """Inverse of :func:`mu_map`."""
    _check_mu_args(mu, n, s)
    if s == 2:
        return _map_s2_inverse(mu, n)
    if _l_s_of_partition(mu, n, s) == s - 1:
        return _map_s2_inverse(conjugate(mu), n)
    seq = [mu.part(i) for i in range(1, n)]
    lam = _recovery(seq, n, s)
    if lam is not None and fits_staircase(lam, n) and _l_value(lam, n) >= s:
        after = _interchange_pass(_muhat(lam, n, s), s)
        if _is_weakly_decreasing(after) and Partition(tuple(after)) == mu:
            return lam
    _, fix_inv = _fix_tables(n, s)
    return Partition(fix_inv[mu.parts])


def _check_mu_args(lam: Partition, n: int, s: int) -> None:
    if s < 2:
        raise BadArgumentError("s must be at least 2")
    if not fits_staircase(lam, n):
        raise DoesNotFitStaircaseError(f"{lam} does not fit in Y_{n}")
