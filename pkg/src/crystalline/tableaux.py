"""Semistandard tableaux over ordered alphabets, plus dual tableaux.

A letter is a pair (value, dual_flag).  Plain alphabets are intervals of
integers under the natural order; the zhat alphabet orders nonzero ints
as 1 < 2 < ... < -2 < -1; the dual alphabet reverses the base order.
Dual tableaux are stored un-rotated (base tableau plus a flag); display
and words apply the 180-degree rotation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .shapes import SkewShape, part, partition, trim

NAT = "nat"
ZHAT = "zhat"

Letter = tuple[int, bool]  # (value, is_dual)


def letter_key(value: int, order: str):
    """Sort key of a value inside its alphabet."""
    if order == ZHAT:
        if value == 0:
            raise ValueError("zhat letters are nonzero")
        return (0, value) if value > 0 else (1, value)
    return value


def le(a: int, b: int, order: str) -> bool:
    return letter_key(a, order) <= letter_key(b, order)


def lt(a: int, b: int, order: str) -> bool:
    return letter_key(a, order) < letter_key(b, order)


@dataclass(frozen=True)
class Tableau:
    """Semistandard filling of a skew shape: rows weakly increase, columns
    strictly increase, in the tableau's letter order."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    order: str = NAT

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != len(outer):
            raise ValueError("row count does not match shape")
        for i in range(1, len(outer) + 1):
            lo, hi = self.shape.row_span(i)
            row = self.rows[i - 1]
            if len(row) != hi - lo + 1:
                raise ValueError(f"row {i} has {len(row)} entries, expected {hi - lo + 1}")
            for a, b in zip(row, row[1:]):
                if not le(a, b, self.order):
                    raise ValueError(f"row {i} not weakly increasing: {row}")
        for i, j in self.shape.cells():
            if (i + 1, j) in self.shape and not lt(
                self.entry(i, j), self.entry(i + 1, j), self.order
            ):
                raise ValueError(f"column {j} not strictly increasing at row {i}")

    def entry(self, i: int, j: int) -> int:
        lo, _ = self.shape.row_span(i)
        return self.rows[i - 1][j - lo]

    @property
    def outer(self) -> tuple[int, ...]:
        return self.shape.outer

    @property
    def inner(self) -> tuple[int, ...]:
        return self.shape.inner

    @property
    def size(self) -> int:
        return self.shape.size

    def is_straight(self) -> bool:
        return not self.shape.inner

    def content(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                out[v] = out.get(v, 0) + 1
        return out

    def column_word(self) -> list[tuple[tuple[int, int], Letter]]:
        """Cells and letters in column-reading order: columns right to left,
        top to bottom within a column."""
        return [((i, j), (self.entry(i, j), False)) for i, j in self.shape.cells_by_column()]

    def with_entry(self, i: int, j: int, value: int) -> "Tableau":
        lo, _ = self.shape.row_span(i)
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - lo] = value
        return Tableau(self.shape, tuple(tuple(r) for r in rows), self.order)

    def grid(self) -> list[list[int | None]]:
        """Left-aligned rows padded with None over the inner shape."""
        out: list[list[int | None]] = []
        for i in range(1, len(self.outer) + 1):
            lo, hi = self.shape.row_span(i)
            out.append([None] * (lo - 1) + list(self.rows[i - 1]))
        return out

    def __str__(self) -> str:
        if not self.outer:
            return "(empty)"
        lines = []
        for row in self.grid():
            lines.append(" ".join("." if v is None else str(v) for v in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class DualTableau:
    """The dual of a plain tableau: displayed rotated by 180 degrees with
    each entry v replaced by the dual letter v^d."""

    base: Tableau

    def __post_init__(self) -> None:
        if self.base.order != NAT:
            raise ValueError("dual tableaux are built over natural-order bases")

    @property
    def size(self) -> int:
        return self.base.size

    def column_word(self) -> list[tuple[tuple[int, int], Letter]]:
        """Reading the rotated display right-to-left by columns equals the
        reverse of the base word with every letter dualized.  Cells refer to
        the base tableau."""
        return [(cell, (v, True)) for cell, (v, _) in reversed(self.base.column_word())]

    def content(self) -> dict[int, int]:
        return self.base.content()

    def rotated_grid(self) -> list[list[tuple[int, bool] | None]]:
        base_grid = self.base.grid()
        width = self.base.outer[0] if self.base.outer else 0
        out: list[list[tuple[int, bool] | None]] = []
        for row in reversed(base_grid):
            padded = list(row) + [None] * (width - len(row))
            out.append([None if v is None else (v, True) for v in reversed(padded)])
        return out

    def __str__(self) -> str:
        if not self.base.outer:
            return "(empty dual)"
        lines = []
        for row in self.rotated_grid():
            lines.append(" ".join("." if v is None else f"{v[0]}^" for v in row))
        return "\n".join(lines)


def from_rows(rows: Sequence[Sequence[int]], inner: Sequence[int] = (), order: str = NAT) -> Tableau:
    """Build a tableau from row entry lists and an inner shape.  A row may be
    empty when the inner shape swallows it; trailing empty rows are trimmed."""
    inner_t = partition(inner)
    outer = trim(tuple(part(inner_t, i + 1) + len(rows[i]) for i in range(len(rows))))
    if any(len(r) > 0 for r in rows[len(outer):]):
        raise ValueError("nonempty row below the shape")
    return Tableau(SkewShape(outer, inner_t), tuple(tuple(r) for r in rows[: len(outer)]), order)


EMPTY = from_rows([])


def highest_tableau(mu: Sequence[int], base: int = 0) -> Tableau:
    """H_mu over [base+1, oo): every cell of row i holds base + i."""
    mu = partition(mu)
    return from_rows([[base + i] * mu[i - 1] for i in range(1, len(mu) + 1)])


def lowest_tableau(nu: Sequence[int]) -> Tableau:
    """L_nu over the negative integers: cell (i,j) holds -nu'_j + i - 1."""
    from .shapes import conjugate

    nu = partition(nu)
    nuc = conjugate(nu)
    return from_rows(
        [[-nuc[j - 1] + i - 1 for j in range(1, nu[i - 1] + 1)] for i in range(1, len(nu) + 1)]
    )


def extremal_dual(nu: Sequence[int], s: int) -> DualTableau:
    """The dual-crystal generator E_nu(s): base cell (i,j) holds s - nu'_j + i.

    Entries lie in [s - l(nu) + 1, s], so s >= base + l(nu) keeps them in the
    alphabet [base+1, oo).
    """
    from .shapes import conjugate

    nu = partition(nu)
    if nu and s < len(nu):
        raise ValueError(f"s={s} must be at least l(nu)={len(nu)}")
    nuc = conjugate(nu)
    base = from_rows(
        [[s - nuc[j - 1] + i for j in range(1, nu[i - 1] + 1)] for i in range(1, len(nu) + 1)]
    )
    return DualTableau(base)


def enumerate_ssyt(shape: SkewShape, letters: Sequence[int], order: str = NAT) -> Iterator[Tableau]:
    """All semistandard fillings of the shape from the given letters, which
    must be listed in strictly increasing alphabet order.  Deterministic:
    fillings come out in lex order of their row-major entry sequences."""
    cells = list(shape.cells())
    outer = shape.outer
    if not cells:
        yield Tableau(shape, tuple(() for _ in outer), order)
        return
    keys = [letter_key(v, order) for v in letters]
    if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
        raise ValueError("letters must be strictly increasing in the alphabet order")
    entries: dict[tuple[int, int], int] = {}
    n = len(cells)

    def rec(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == n:
            yield entries
            return
        i, j = cells[k]
        for idx, v in enumerate(letters):
            if (i, j - 1) in entries and keys[idx] < letter_key(entries[(i, j - 1)], order):
                continue
            if (i - 1, j) in entries and keys[idx] <= letter_key(entries[(i - 1, j)], order):
                continue
            entries[(i, j)] = v
            yield from rec(k + 1)
            del entries[(i, j)]

    for fill in rec(0):
        rows = []
        for i in range(1, len(outer) + 1):
            lo, hi = shape.row_span(i)
            rows.append(tuple(fill[(i, j)] for j in range(lo, hi + 1)))
        yield Tableau(shape, tuple(rows), order)


def tableau_to_json(t: Tableau | DualTableau) -> dict:
    """JSON form: outer/inner plus left-aligned rows with null padding.
    Dual tableaux serialize their rotated display with {"d": k} entries."""
    if isinstance(t, DualTableau):
        base = t.base
        width = base.outer[0] if base.outer else 0
        nrows = len(base.outer)
        outer = tuple(width - part(base.inner, nrows + 1 - i) for i in range(1, nrows + 1))
        inner = trim(tuple(width - part(base.outer, nrows + 1 - i) for i in range(1, nrows + 1)))
        rows = [
            [None if v is None else {"d": v[0]} for v in row] for row in t.rotated_grid()
        ]
        return {"dual": True, "outer": list(outer), "inner": list(inner), "rows": rows}
    out: dict = {
        "outer": list(t.outer),
        "inner": list(t.inner),
        "rows": [[v for v in row] for row in t.grid()],
    }
    if t.order != NAT:
        out["order"] = t.order
    return out


def tableau_from_json(data: dict) -> Tableau | DualTableau:
    order = data.get("order", NAT)
    rows_in = data["rows"]
    if data.get("dual"):
        # un-rotate: reverse rows and each row, strip dual markers
        width = max((len(r) for r in rows_in), default=0)
        base_rows = []
        for row in reversed(rows_in):
            padded = list(row) + [None] * (width - len(row))
            base_rows.append([v["d"] for v in reversed(padded) if v is not None])
        return DualTableau(from_rows([r for r in base_rows if r], order=NAT))
    inner = partition(data.get("inner", []))
    rows = []
    for i, row in enumerate(rows_in):
        vals = [v for v in row if v is not None]
        if row[: part(inner, i + 1)] != [None] * part(inner, i + 1):
            raise ValueError("non-null entry inside the inner shape")
        rows.append(vals)
    return from_rows(rows, inner, order)
