"""Rothe diagrams, Fulton ranks and essential sets, dominance, 132-counting.

The diagram D(p) of a permutation p is drawn in matrix convention (row 1 on
top, column 1 on the left, the dot of row i in column p[i]).  A cell (i, j)
survives the south/east shading exactly when ``p[i] > j`` and the dot of
column j lies below row i; this closed form is used throughout instead of
the literal shading sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import BadArgumentError
from .perm import Permutation, code
from .young import Cell, Partition

_RANK_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Diagram:
    n: int
    cells: frozenset[Cell]

    @property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))


@dataclass(frozen=True, eq=True)
class RankedDiagram:
    """A diagram with Fulton's rank function and essential set.

    ``rank[(i, j)]`` counts the permutation dots strictly northwest of the
    cell; it is constant on 4-connected components.  The essential cells are
    those with no diagram neighbour to the south or east.
    """

    base: Diagram
    rank: Mapping[Cell, int]
    essential: frozenset[Cell]


@dataclass(frozen=True)
class NotDominant:
    """Classification result: D(p) is not a Young diagram.

    ``witness`` is a diagram cell lying outside the 4-connected component
    of (1, 1).
    """

    witness: Cell


def build_diagram(p: Permutation) -> Diagram:
    """Cells (i, j) with p[i] > j and the dot of column j below row i.

    The cell count equals the inversion number of p.
    """
    n = p.n
    pos = [0] * (n + 1)
    for i, v in enumerate(p.values, 1):
        pos[v] = i
    cells = frozenset(
        (i, j)
        for i, v in enumerate(p.values, 1)
        for j in range(1, v)
        if pos[j] > i
    )
    return Diagram(n=n, cells=cells)


def rank_diagram(p: Permutation) -> RankedDiagram:
    """Diagram with ranks (dots strictly northwest) and essential cells."""
    base = build_diagram(p)
    vals = p.values
    rank = {
        (i, j): sum(1 for i2 in range(1, i) if vals[i2 - 1] < j)
        for (i, j) in base.cells
    }
    essential = frozenset(
        (i, j)
        for (i, j) in base.cells
        if (i + 1, j) not in base.cells and (i, j + 1) not in base.cells
    )
    return RankedDiagram(base=base, rank=rank, essential=essential)


def dominant_partition(p: Permutation) -> Partition | NotDominant:
    """The partition lambda with D(p) = diagram(lambda), if one exists.

    D(p) is a (top- and left-justified) Young diagram exactly when p avoids
    132; the identity yields the empty partition.  Otherwise returns a
    :class:`NotDominant` carrying a diagram cell disconnected from (1, 1).
    """
    diag = build_diagram(p)
    c = code(p)
    left_justified = all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and all(
        (i, j) in diag.cells for i, ci in enumerate(c, 1) for j in range(1, ci + 1)
    )
    if left_justified:
        return Partition(c)
    return NotDominant(witness=_disconnected_cell(diag))


def _disconnected_cell(diag: Diagram) -> Cell:
    cells = diag.cells
    ordered = sorted(cells)
    if (1, 1) not in cells:
        return ordered[0]
    component = {(1, 1)}
    frontier = [(1, 1)]
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in component:
                component.add(nb)
                frontier.append(nb)
    for cell in ordered:
        if cell not in component:
            return cell
    raise AssertionError("diagram is a single component containing (1,1)")


def count_132_by_rank(p: Permutation) -> int:
    """Sum of cell ranks over D(p); equals the number of 132-patterns in p."""
    return sum(rank_diagram(p).rank.values())


def render(p: Permutation, show_ranks: bool = False) -> str:
    """ASCII grid: 'o' dots, '#' diagram cells, '.' shaded cells.

    With ``show_ranks`` each diagram cell shows its rank instead of '#'
    (base-36 digit; '?' past that).
    """
    ranked = rank_diagram(p) if show_ranks else None
    diag = ranked.base if ranked else build_diagram(p)
    rows = []
    for i in range(1, p.n + 1):
        row = []
        for j in range(1, p.n + 1):
            if p[i] == j:
                row.append("o")
            elif (i, j) in diag.cells:
                if ranked is None:
                    row.append("#")
                else:
                    r = ranked.rank[(i, j)]
                    row.append(_RANK_DIGITS[r] if r < len(_RANK_DIGITS) else "?")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows)


def as_dict(p: Permutation) -> dict:
    """JSON-ready form: cells, ranks keyed "i,j", and the essential set."""
    ranked = rank_diagram(p)
    return {
        "n": p.n,
        "cells": [list(c) for c in ranked.base.sorted_cells],
        "ranks": {f"{i},{j}": ranked.rank[(i, j)] for (i, j) in ranked.base.sorted_cells},
        "essential": [list(c) for c in sorted(ranked.essential)],
    }


def from_dict(data: dict) -> RankedDiagram:
    """Rebuild a :class:`RankedDiagram` from :func:`as_dict` output."""
    try:
        n = int(data["n"])
        cells = frozenset((int(i), int(j)) for i, j in data["cells"])
        rank = {
            tuple(int(t) for t in key.split(",")): int(v)
            for key, v in data["ranks"].items()
        }
        essential = frozenset((int(i), int(j)) for i, j in data["essential"])
    except (KeyError, ValueError, TypeError) as exc:
        raise BadArgumentError(f"malformed diagram dict: {exc}") from exc
    return RankedDiagram(base=Diagram(n=n, cells=cells), rank=rank, essential=essential)
