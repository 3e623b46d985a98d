"""Partitions, generalized partitions, and skew shapes.

Partitions are plain tuples of weakly decreasing positive ints, always
trimmed of trailing zeros.  Generalized partitions carry an explicit
length and may have negative parts; they are never trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterator, Sequence


def trim(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros and return a tuple."""
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    """Weakly decreasing, nonnegative."""
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and (
        not parts or parts[-1] >= 0
    )


def partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize a partition given as any int sequence."""
    if not is_partition(parts):
        raise ValueError(f"not a partition: {list(parts)}")
    return trim(parts)


def part(p: Sequence[int], i: int) -> int:
    """The i-th part, 1-indexed, 0 beyond the end."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Sequence[int]) -> int:
    return sum(p)


def conjugate(p: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Diagram containment inner <= outer, part by part."""
    return all(part(outer, i) >= part(inner, i) for i in range(1, len(inner) + 1))


def union_parts(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Multiset union of parts, sorted decreasingly (written p cup q)."""
    return trim(sorted(list(p) + list(q), reverse=True))


def sum_parts(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Componentwise sum p + q."""
    n = max(len(p), len(q))
    return trim(tuple(part(p, i) + part(q, i) for i in range(1, n + 1)))


def bump_part(p: Sequence[int], i: int) -> tuple[int, ...] | None:
    """Add one cell to row i; None if the result is not a partition."""
    if i < 1 or i > len(p) + 1:
        return None
    parts = list(p) + [0] * (i - len(p))
    parts[i - 1] += 1
    return trim(parts) if is_partition(parts) else None


def debump_part(p: Sequence[int], i: int) -> tuple[int, ...] | None:
    """Remove one cell from row i; None if the result is not a partition."""
    if i < 1 or i > len(p):
        return None
    parts = list(p)
    parts[i - 1] -= 1
    return trim(parts) if is_partition(parts) and parts[i - 1] >= 0 else None


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest part first, in lex-decreasing order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for head in range(top, 0, -1):
        for tail in partitions_of(n - head, head):
            yield (head,) + tail


def partitions_up_to(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of size 0..n."""
    for s in range(n + 1):
        yield from partitions_of(s, max_part)


def subpartitions(p: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All partitions contained in p."""

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == len(p):
            yield ()
            return
        for v in range(min(part(p, i + 1), prev), -1, -1):
            for tail in rec(i + 1, v):
                yield (v,) + tail

    for q in rec(0, p[0] if p else 0):
        yield trim(q)


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner with inner contained in outer."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def row_span(self, i: int) -> tuple[int, int]:
        """Columns (first, last) of the cells of row i, 1-indexed; empty rows
        give first > last."""
        return part(self.inner, i) + 1, part(self.outer, i)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells row by row."""
        for i in range(1, len(self.outer) + 1):
            lo, hi = self.row_span(i)
            for j in range(lo, hi + 1):
                yield (i, j)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        if i < 1 or i > len(self.outer):
            return False
        lo, hi = self.row_span(i)
        return lo <= j <= hi

    def cells_by_column(self, reverse_cols: bool = True) -> Iterator[tuple[int, int]]:
        """Cells column by column, rightmost column first by default, top to
        bottom inside a column (the column-word visiting order)."""
        if not self.outer:
            return
        cols = range(self.outer[0], 0, -1) if reverse_cols else range(1, self.outer[0] + 1)
        for j in cols:
            for i in range(1, len(self.outer) + 1):
                if (i, j) in self:
                    yield (i, j)


@dataclass(frozen=True)
class GeneralizedPartition:
    """Weakly decreasing tuple of n ints, possibly negative, never trimmed."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) != self.n:
            raise ValueError(f"expected {self.n} parts, got {len(self.parts)}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(self.n - 1)):
            raise ValueError(f"not weakly decreasing: {self.parts}")

    def shift(self, c: int) -> "GeneralizedPartition":
        """All parts moved by c."""
        return GeneralizedPartition(self.n, tuple(x + c for x in self.parts))

    def insert(self, k: int) -> "GeneralizedPartition":
        """Insert one part of size k, keeping the parts sorted (mu cup {k})."""
        parts = sorted(self.parts + (k,), reverse=True)
        return GeneralizedPartition(self.n + 1, tuple(parts))

    def minus_rect(self, r: int) -> tuple[int, ...]:
        """The partition mu - (r^n); requires all parts >= r."""
        if self.n and self.parts[-1] < r:
            raise ValueError(f"parts {self.parts} not all >= {r}")
        return trim(tuple(x - r for x in self.parts))


def gp(parts: Sequence[int]) -> GeneralizedPartition:
    return GeneralizedPartition(len(parts), tuple(parts))


def generalized_partitions(n: int, lo: int, hi: int) -> Iterator[GeneralizedPartition]:
    """All weakly decreasing n-tuples with entries in [lo, hi]."""

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        for v in range(min(prev, hi), lo - 1, -1):
            for tail in rec(i + 1, v):
                yield (v,) + tail

    for parts in rec(0, hi):
        yield GeneralizedPartition(n, parts)
