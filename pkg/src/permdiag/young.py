"""Partitions, conjugation, corners, and the staircase-bounded family Y_n.

Y_n is the set of partitions whose Young diagram fits inside the staircase
(n-1, n-2, ..., 1); there are Catalan(n) of them.  Partitions are stored
with trailing zeros stripped, so equal shapes compare equal regardless of
zero padding.  Textual form: ``"[7,7,4,3,3,3,1,1,1]"``; the empty partition
is ``"[]"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BadArgumentError

Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers.

    >>> Partition((3, 1, 0, 0)) == Partition((3, 1))
    True
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise BadArgumentError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise BadArgumentError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        """Number of cells."""
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition(())


def parse_partition(text: str) -> Partition:
    """Parse the bracketed textual form, e.g. ``"[3,1]"`` or ``"[]"``."""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise BadArgumentError(f"cannot parse partition from {text!r}")
    inner = stripped[1:-1].strip()
    if not inner:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in inner.split(","))
    except ValueError as exc:
        raise BadArgumentError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(v) for v in lam.parts) + "]"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: mu[j] = #{i : lam[i] >= j}.

    >>> conjugate(Partition((1, 1, 1))).parts
    (3,)
    """
    if not lam.parts:
        return EMPTY
    return Partition(
        tuple(sum(1 for v in lam.parts if v >= j) for j in range(1, lam.parts[0] + 1))
    )


def durfee_rank(lam: Partition) -> int:
    """Largest i with lam[i] >= i (the main-diagonal length)."""
    r = 0
    for i, v in enumerate(lam.parts, 1):
        if v >= i:
            r = i
        else:
            break
    return r


def corners(lam: Partition) -> tuple[Cell, ...]:
    """Cells (i, lam[i]) where the shape strictly drops, in row order.

    Rows are strictly increasing and columns strictly decreasing across the
    result.
    """
    out = []
    for i, v in enumerate(lam.parts, 1):
        if v > lam.part(i + 1):
            out.append((i, v))
    return tuple(out)


def partition_from_corners(cells: Iterable[Cell]) -> Partition:
    """The unique partition whose corner list is ``cells``.

    ``cells`` must have strictly increasing rows and strictly decreasing
    columns, all positive.
    """
    cs = list(cells)
    for (r1, c1), (r2, c2) in zip(cs, cs[1:]):
        if not (r1 < r2 and c1 > c2):
            raise BadArgumentError(f"not a valid corner list: {cs}")
    parts: list[int] = []
    prev_row = 0
    for row, col in cs:
        if row <= 0 or col <= 0:
            raise BadArgumentError(f"corner off the grid: {(row, col)}")
        parts.extend([col] * (row - prev_row))
        prev_row = row
    return Partition(tuple(parts))


def staircase(n: int) -> Partition:
    """The staircase shape (n-1, n-2, ..., 1)."""
    if n < 1:
        raise BadArgumentError("n must be at least 1")
    return Partition(tuple(range(n - 1, 0, -1)))


def fits_staircase(lam: Partition, n: int) -> bool:
    """Whether lam[i] <= n - i for all i, i.e. lam is in Y_n."""
    if n < 1:
        raise BadArgumentError("n must be at least 1")
    return all(v <= n - i for i, v in enumerate(lam.parts, 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """Whether the diagram of ``lam`` contains the diagram of ``mu``."""
    return all(lam.part(i) >= v for i, v in enumerate(mu.parts, 1))


def staircase_partitions(n: int) -> Iterator[Partition]:
    """All of Y_n, in lexicographic order of the part lists.

    >>> sum(1 for _ in staircase_partitions(4))
    14
    """
    if n < 1:
        raise BadArgumentError("n must be at least 1")

    def gen(row: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for v in range(1, min(cap, n - row) + 1):
            for rest in gen(row + 1, v):
                yield (v,) + rest

    for parts in gen(1, n - 1):
        yield Partition(parts)
