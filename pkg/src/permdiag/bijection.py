"""The corner bijection between 321-avoiding and 132-avoiding permutations.

A 321-avoider p with excedances i_1 < ... < i_e maps to the 132-avoider
whose diagram is the Young diagram with corners (i_k, n+1-p[i_k]); the
excedance set of p equals the descent set of the image.  Both directions
factor through partitions so that each arrow is testable on its own.
"""

from __future__ import annotations

from typing import Sequence

from . import pattern
from .diagram import NotDominant, dominant_partition
from .errors import (
    BadArgumentError,
    DoesNotFitStaircaseError,
    MalformedMinimaError,
    Not132AvoidingError,
    Not321AvoidingError,
    UnfillableError,
)
from .perm import Permutation, excedances
from .young import Partition, corners, fits_staircase, partition_from_corners


def phi(p: Permutation) -> Permutation:
    """Map a 321-avoider to the 132-avoider with the matching corner diagram.

    >>> str(phi(Permutation((1, 4, 7, 2, 3, 8, 5, 6, 10, 9))))
    '8 9 5 4 6 7 2 3 10 1'
    """
    if not pattern.avoids(p, pattern.PATTERN_321):
        raise Not321AvoidingError(f"'{p}' contains 321")
    n = p.n
    cells = tuple((i, n + 1 - p[i]) for i in excedances(p))
    return permutation_from_partition(partition_from_corners(cells), n)


def phi_inverse(s: Permutation) -> Permutation:
    """Read the corners of D(s) back into excedances and letters.

    Corner (i, j) becomes the excedance i with letter n+1-j; the remaining
    positions take the remaining values in increasing order, which is forced
    for a 321-avoider.
    """
    lam = dominant_partition(s)
    if isinstance(lam, NotDominant):
        raise Not132AvoidingError(f"'{s}' contains 132")
    n = s.n
    vals = [0] * n
    taken = set()
    for (i, j) in corners(lam):
        vals[i - 1] = n + 1 - j
        taken.add(n + 1 - j)
    rest = iter(sorted(set(range(1, n + 1)) - taken))
    for i in range(n):
        if vals[i] == 0:
            vals[i] = next(rest)
    return Permutation(tuple(vals))


def permutation_from_partition(lam: Partition, n: int) -> Permutation:
    """The unique 132-avoider in S_n whose diagram is ``lam``.

    Row by row the dot goes in the leftmost unused column right of the
    diagram cells, i.e. position i takes the smallest unused value greater
    than lam_i.
    """
    if n < 1:
        raise BadArgumentError("n must be at least 1")
    if not fits_staircase(lam, n):
        raise DoesNotFitStaircaseError(f"{lam} does not fit in Y_{n}")
    used = [False] * (n + 2)
    vals = []
    for i in range(1, n + 1):
        j = lam.part(i) + 1
        while used[j]:
            j += 1
        used[j] = True
        vals.append(j)
    return Permutation(tuple(vals))


def fill_from_minima(minima: Sequence[tuple[int, int]], n: int) -> Permutation:
    """Rebuild the 132-avoider with the given left-to-right minima.

    ``minima`` lists (position, value) pairs with strictly increasing
    positions starting at 1 and strictly decreasing values ending at 1.
    Each remaining value a goes to the leftmost free position right of the
    position of a-1; when no such position exists the minima admit no
    132-avoider and :class:`UnfillableError` is raised.
    """
    if n < 1:
        raise BadArgumentError("n must be at least 1")
    mins = [(int(q), int(v)) for q, v in minima]
    if not mins or mins[0][0] != 1:
        raise MalformedMinimaError("position 1 must carry a minimum")
    if mins[-1][1] != 1:
        raise MalformedMinimaError("value 1 must be the last minimum")
    for (q1, v1), (q2, v2) in zip(mins, mins[1:]):
        if not (q1 < q2 and v1 > v2):
            raise MalformedMinimaError(
                "positions must increase strictly and values decrease strictly"
            )
    if any(not (1 <= q <= n and 1 <= v <= n) for q, v in mins):
        raise MalformedMinimaError(f"minima outside the 1..{n} grid")

    vals = [0] * n
    position_of = {}
    for q, v in mins:
        vals[q - 1] = v
        position_of[v] = q
    fixed = set(position_of)
    for a in sorted(set(range(1, n + 1)) - fixed):
        start = position_of[a - 1]
        spot = next((j for j in range(start + 1, n + 1) if vals[j - 1] == 0), None)
        if spot is None:
            raise UnfillableError(f"no free position after {a - 1} for value {a}")
        vals[spot - 1] = a
        position_of[a] = spot
    return Permutation(tuple(vals))
