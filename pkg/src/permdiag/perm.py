"""Permutations in one-line notation and their classical statistics.

Positions and values are 1-indexed throughout, matching the usual
combinatorial conventions: a permutation ``p`` of {1..n} is the word
``p[1] p[2] ... p[n]``.  The textual form is space-separated decimal
values, e.g. ``"8 9 5 4 6 7 2 3 10 1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DuplicateValueError, EmptyPermutationError, OutOfRangeError


@dataclass(frozen=True)
class Permutation:
    """An immutable permutation of {1..n}.

    Use :func:`make_permutation` (or :func:`parse_permutation`) to construct
    with validation; the constructor itself does not check its input.

    >>> p = make_permutation([2, 3, 1])
    >>> p[1], p.n
    (2, 3)
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, position: int) -> int:
        """Letter at 1-indexed ``position``."""
        return self.values[position - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class PermStats:
    """Every classical statistic the rest of the package consumes.

    ``descents`` and ``excedances`` are ordered position tuples within
    {1..n-1}; ``ltr_minima`` / ``rtl_maxima`` are (position, value) pairs in
    increasing position order; ``code[i-1]`` counts the later letters smaller
    than ``p[i]`` and sums to ``inversions``.
    """

    descents: tuple[int, ...]
    excedances: tuple[int, ...]
    excedance_letters: tuple[int, ...]
    ltr_minima: tuple[tuple[int, int], ...]
    rtl_maxima: tuple[tuple[int, int], ...]
    inversions: int
    code: tuple[int, ...]


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate ``values`` as a rearrangement of 1..n and wrap it.

    Raises :class:`EmptyPermutationError`, :class:`OutOfRangeError` or
    :class:`DuplicateValueError` on bad input.
    """
    vals = tuple(int(v) for v in values)
    n = len(vals)
    if n == 0:
        raise EmptyPermutationError("a permutation needs at least one letter")
    seen = [False] * (n + 1)
    for v in vals:
        if not 1 <= v <= n:
            raise OutOfRangeError(f"letter {v} outside 1..{n}")
        if seen[v]:
            raise DuplicateValueError(f"letter {v} appears more than once")
        seen[v] = True
    return Permutation(vals)


def parse_permutation(text: str) -> Permutation:
    """Parse the space-separated textual form, e.g. ``"2 3 1"``."""
    try:
        vals = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise OutOfRangeError(f"cannot parse permutation from {text!r}") from exc
    return make_permutation(vals)


def format_permutation(p: Permutation) -> str:
    return " ".join(str(v) for v in p.values)


def identity(n: int) -> Permutation:
    return make_permutation(range(1, n + 1))


def inverse(p: Permutation) -> Permutation:
    """The inverse q with q[p[i]] = i for all i.

    >>> str(inverse(make_permutation([2, 3, 1])))
    '3 1 2'
    """
    inv = [0] * p.n
    for i, v in enumerate(p.values, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def code(p: Permutation) -> tuple[int, ...]:
    """The Lehmer code: c[i] = #{j > i : p[j] < p[i]}.

    >>> code(make_permutation([3, 1, 2]))
    (2, 0, 0)
    """
    vals = p.values
    n = len(vals)
    return tuple(
        sum(1 for j in range(i + 1, n) if vals[j] < vals[i]) for i in range(n)
    )


def descents(p: Permutation) -> tuple[int, ...]:
    """Positions i with p[i] > p[i+1]."""
    vals = p.values
    return tuple(i for i in range(1, len(vals)) if vals[i - 1] > vals[i])


def excedances(p: Permutation) -> tuple[int, ...]:
    """Positions i with p[i] > i."""
    return tuple(i for i, v in enumerate(p.values, 1) if v > i)


def left_to_right_minima(p: Permutation) -> tuple[tuple[int, int], ...]:
    """(position, value) pairs of letters smaller than everything before them."""
    out = []
    current = None
    for i, v in enumerate(p.values, 1):
        if current is None or v < current:
            out.append((i, v))
            current = v
    return tuple(out)


def right_to_left_maxima(p: Permutation) -> tuple[tuple[int, int], ...]:
    """(position, value) pairs of letters larger than everything after them."""
    out = []
    current = 0
    for i in range(p.n, 0, -1):
        v = p.values[i - 1]
        if v > current:
            out.append((i, v))
            current = v
    return tuple(reversed(out))


def inversions(p: Permutation) -> int:
    return sum(code(p))


def statistics(p: Permutation) -> PermStats:
    """All statistics of ``p`` in one bundle."""
    exc = excedances(p)
    c = code(p)
    return PermStats(
        descents=descents(p),
        excedances=exc,
        excedance_letters=tuple(p[i] for i in exc),
        ltr_minima=left_to_right_minima(p),
        rtl_maxima=right_to_left_maxima(p),
        inversions=sum(c),
        code=c,
    )
