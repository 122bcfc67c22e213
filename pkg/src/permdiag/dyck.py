"""Dyck paths, height statistics, and the permutation/path correspondences.

A path is a string over 'U'/'D' of length 2n that never dips below the
axis.  Two classical maps land here: the excedance-run construction for
321-avoiders and the left-to-right-minima construction for 132-avoiders;
the corner bijection intertwines them, and the region between a path and
the wedge over (0,0)-(n,n)-(2n,0) is the diagram of the 132-avoider.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import pattern
from .bijection import fill_from_minima
from .errors import (
    BelowAxisError,
    DoesNotFitStaircaseError,
    InvalidPathError,
    Not132AvoidingError,
    Not321AvoidingError,
    UnbalancedPathError,
)
from .perm import Permutation, excedances, left_to_right_minima
from .young import Partition, fits_staircase

UP = "U"
DOWN = "D"


@dataclass(frozen=True)
class DyckPath:
    steps: str

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class HeightProfile:
    """Start heights w_1..w_2n plus the derived sums and counts.

    ``sum_all`` is the area statistic, ``sum_down`` restricts the sum to
    down-steps, ``returns`` counts down-steps landing on the axis, and
    ``rank_height`` is w_{n+1}, the height at the path's midpoint.
    """

    w: tuple[int, ...]
    sum_all: int
    sum_down: int
    returns: int
    rank_height: int


def make_path(steps: str) -> DyckPath:
    """Validate a step string as a Dyck path.

    >>> make_path("UUDD").n
    2
    """
    if any(ch not in (UP, DOWN) for ch in steps):
        raise InvalidPathError(f"steps must be over 'U'/'D', got {steps!r}")
    if steps.count(UP) != steps.count(DOWN):
        raise UnbalancedPathError(f"{steps!r} has unequal step counts")
    height = 0
    for ch in steps:
        height += 1 if ch == UP else -1
        if height < 0:
            raise BelowAxisError(f"{steps!r} dips below the axis")
    return DyckPath(steps)


parse_path = make_path


def heights(path: DyckPath) -> HeightProfile:
    """Start height of every step and the statistics built from them."""
    w = []
    h = 0
    returns = 0
    sum_down = 0
    for ch in path.steps:
        w.append(h)
        if ch == UP:
            h += 1
        else:
            sum_down += w[-1]
            h -= 1
            if h == 0:
                returns += 1
    n = path.n
    return HeightProfile(
        w=tuple(w),
        sum_all=sum(w),
        sum_down=sum_down,
        returns=returns,
        rank_height=w[n] if n >= 1 else 0,
    )


def _peaks(path: DyckPath) -> list[tuple[int, int]]:
    """Cumulative (ups, downs) after each maximal up-run/down-run block."""
    runs = [(ch, len(list(grp))) for ch, grp in itertools.groupby(path.steps)]
    out = []
    ups = downs = 0
    for k in range(0, len(runs), 2):
        ups += runs[k][1]
        downs += runs[k + 1][1]
        out.append((ups, downs))
    return out


def psi_bjs(p: Permutation) -> DyckPath:
    """The excedance-run path of a 321-avoider.

    With excedances i_1 < ... < i_e, letters a_k = p[i_k] - 1 and b_k = i_k
    (a_0 = b_0 = 0, a_{e+1} = b_{e+1} = n), block k contributes
    a_k - a_{k-1} up-steps then b_k - b_{k-1} down-steps.

    >>> str(psi_bjs(Permutation((1, 4, 7, 2, 3, 8, 5, 6, 10, 9))))
    'UUUDDUUUDUDDDUUDDDUD'
    """
    if not pattern.avoids(p, pattern.PATTERN_321):
        raise Not321AvoidingError(f"'{p}' contains 321")
    n = p.n
    exc = excedances(p)
    a = [0] + [p[i] - 1 for i in exc] + [n]
    b = [0] + list(exc) + [n]
    steps = "".join(
        UP * (a[k] - a[k - 1]) + DOWN * (b[k] - b[k - 1]) for k in range(1, len(a))
    )
    return DyckPath(steps)


def psi_bjs_inverse(path: DyckPath) -> Permutation:
    """Excedances and letters from the peak blocks; the rest fills increasingly."""
    blocks = _peaks(path)
    n = blocks[-1][0]
    vals = [0] * n
    taken = set()
    for ups, downs in blocks[:-1]:
        vals[downs - 1] = ups + 1
        taken.add(ups + 1)
    rest = iter(sorted(set(range(1, n + 1)) - taken))
    for i in range(n):
        if vals[i] == 0:
            vals[i] = next(rest)
    return Permutation(tuple(vals))


def psi_k(p: Permutation) -> DyckPath:
    """The left-to-right-minima path of a 132-avoider.

    With minima c_1 > ... > c_{e+1} at positions q_1 < ... < q_{e+1}
    (c_0 = n + 1, q_{e+2} = n + 1), block k contributes c_{k-1} - c_k
    up-steps then q_{k+1} - q_k down-steps.
    """
    if not pattern.avoids(p, pattern.PATTERN_132):
        raise Not132AvoidingError(f"'{p}' contains 132")
    n = p.n
    mins = left_to_right_minima(p)
    c = [n + 1] + [v for _, v in mins]
    q = [q_ for q_, _ in mins] + [n + 1]
    steps = "".join(
        UP * (c[k - 1] - c[k]) + DOWN * (q[k] - q[k - 1]) for k in range(1, len(c))
    )
    return DyckPath(steps)


def psi_k_inverse(path: DyckPath) -> Permutation:
    """Minima from the peak blocks, completed by the greedy fill."""
    blocks = _peaks(path)
    n = blocks[-1][0]
    mins = []
    position = 1
    for ups, downs in blocks:
        mins.append((position, n + 1 - ups))
        position = 1 + downs
    return fill_from_minima(mins, n)


def path_partition(path: DyckPath) -> Partition:
    """The staircase region between the wedge and the path, read as a shape.

    The i-th down-step ending at height h contributes row length
    n - i - h; rows are produced weakly decreasing automatically.
    """
    n = path.n
    h = 0
    i = 0
    rows = []
    for ch in path.steps:
        if ch == UP:
            h += 1
        else:
            h -= 1
            i += 1
            rows.append(n - i - h)
    return Partition(tuple(rows))


def partition_path(lam: Partition, n: int) -> DyckPath:
    """Inverse of :func:`path_partition` on Y_n."""
    if not fits_staircase(lam, n):
        raise DoesNotFitStaircaseError(f"{lam} does not fit in Y_{n}")
    steps = []
    h = 0
    for i in range(1, n + 1):
        target = n - i - lam.part(i)
        steps.append(UP * (target + 1 - h))
        steps.append(DOWN)
        h = target
    return DyckPath("".join(steps))


def path_json(path: DyckPath) -> dict:
    """JSON-ready form with the start heights and return count."""
    profile = heights(path)
    return {
        "n": path.n,
        "steps": path.steps,
        "w": list(profile.w),
        "returns": profile.returns,
    }
