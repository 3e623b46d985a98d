"""Integer-matrix bicrystals and the skew-pair isomorphism psi.

A finitely supported matrix of nonnegative integers carries two
commuting crystal structures: read each row as a one-row tableau with
a_ij copies of the letter j and tensor the rows top to bottom, or do
the same after transposing.  Pairs (M dual, N) model the modified
quantized enveloping algebra's crystal; psi turns a tableau pair
S (x) T into a pair of skew tableaux on a shared inner shape, kappa
slides skew tableaux horizontally, and RSK plus pair composition
recovers the Peter-Weyl component of any bimatrix element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import Weight, e_op, f_op, wt_add, wt_negate
from .extremal import ExtremalPair, canonical_factor, compose_factor, decompose_element
from .lr import cset_bijection
from .rsk import column_insert_with_cell, rsk
from .shapes import part
from .switching import skew_compose
from .tableaux import DualTableau, Tableau, from_rows


@dataclass(frozen=True)
class IntMatrix:
    """Finitely supported table of nonnegative integers, row-major entries."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(sorted(dict(self.entries).items())))
        for (i, j), a in self.entries:
            if a <= 0:
                raise ValueError("stored entries must be positive")
            self._check_index(i, j)

    def _check_index(self, i: int, j: int) -> None:
        if i < 1 or j < 1:
            raise ValueError("row and column indices start at 1")

    @classmethod
    def of(cls, data) -> "IntMatrix":
        items = data.items() if isinstance(data, dict) else data
        return cls(tuple((cell, a) for cell, a in items if a))

    def to_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def get(self, i: int, j: int) -> int:
        return dict(self.entries).get((i, j), 0)

    @property
    def support(self) -> int:
        return sum(a for _, a in self.entries)

    def transpose(self) -> "IntMatrix":
        return type(self)(tuple(((j, i), a) for (i, j), a in self.entries))

    def _slots(self, i: int) -> list[tuple[int, int]]:
        # one slot per unit, rows top to bottom, letters i+1 before i
        # within a row (the column word of a one-row tableau descends)
        out: list[tuple[int, int]] = []
        row_of = {}
        for (ri, rj), a in self.entries:
            if rj in (i, i + 1):
                row_of.setdefault(ri, {})[rj] = a
        for ri in sorted(row_of):
            counts = row_of[ri]
            out.extend([(ri, i + 1)] * counts.get(i + 1, 0))
            out.extend([(ri, i)] * counts.get(i, 0))
        return out

    def signs(self, i: int) -> list[int]:
        return [1 if j == i else -1 for _, j in self._slots(i)]

    def apply_at(self, i: int, k: int, up: bool) -> "IntMatrix":
        ri, rj = self._slots(i)[k]
        target = i if up else i + 1
        table = dict(self.entries)
        table[(ri, rj)] -= 1
        table[(ri, target)] = table.get((ri, target), 0) + 1
        return type(self)(tuple((c, a) for c, a in table.items() if a))

    def weight(self) -> Weight:
        cols: dict[int, int] = {}
        for (_, j), a in self.entries:
            cols[j] = cols.get(j, 0) + a
        return (0, cols)

    def key(self):
        return ("intmat", self.entries)


def matrix_act(m: IntMatrix, i: int, direction: str, transposed: bool = False):
    """Apply e_i (direction "raise") or f_i ("lower"); the transposed flag
    conjugates by transpose, giving the second crystal structure."""
    if transposed:
        r = matrix_act(m.transpose(), i, direction)
        return None if r is None else r.transpose()
    return (e_op if direction == "raise" else f_op)(m, i)


@dataclass(frozen=True)
class BimatrixElement:
    """Pair (M dual, N): the dual of mdual is the left tensor factor."""

    mdual: IntMatrix
    n: IntMatrix

    def signs(self, i: int) -> list[int]:
        return [-s for s in reversed(self.mdual.signs(i))] + self.n.signs(i)

    def apply_at(self, i: int, k: int, up: bool) -> "BimatrixElement":
        dual_len = len(self.mdual.signs(i))
        if k < dual_len:
            return BimatrixElement(
                self.mdual.apply_at(i, dual_len - 1 - k, not up), self.n
            )
        return BimatrixElement(self.mdual, self.n.apply_at(i, k - dual_len, up))

    def weight(self) -> Weight:
        return wt_add(wt_negate(self.mdual.weight()), self.n.weight())

    def key(self):
        return ("bimat", self.mdual.entries, self.n.entries)

    def transpose(self) -> "BimatrixElement":
        return BimatrixElement(self.mdual.transpose(), self.n.transpose())


def omega(b: BimatrixElement) -> Weight:
    """wt(N^t) - wt(M^t): the row sums of N minus the row sums of M."""
    return wt_add(b.n.transpose().weight(), wt_negate(b.mdual.transpose().weight()))


def bimatrix_act(b: BimatrixElement, i: int, direction: str, transposed: bool = False):
    if transposed:
        r = bimatrix_act(b.transpose(), i, direction)
        return None if r is None else r.transpose()
    return (e_op if direction == "raise" else f_op)(b, i)


# --- the isomorphism psi ----------------------------------------------------


def psi(s: Tableau, t: DualTableau, r: int = 0) -> tuple[DualTableau, Tableau]:
    """S (x) T -> Y^dual (x) X on a shared inner shape lambda.

    Insert T into (S, empty) and keep the recording W; peel the result
    into its canonical factors (V~, U~); split W into the LR pair
    (W1, W2); then rebuild X over U~ with W1 and Y over the base of V~
    with W2."""
    pair, w = decompose_element(s, t, r)
    vtilde, utilde = canonical_factor(pair)
    w1, w2 = cset_bijection(w, s.outer)
    x = skew_compose(utilde, w1)
    y = skew_compose(vtilde.base, w2)
    return DualTableau(y), x


def kappa(x: Tableau, k: int) -> Tableau:
    """Shift the first k rows one column to the right."""
    if k <= 0:
        return x
    n = max(len(x.rows), k)
    rows = [list(x.rows[i]) if i < len(x.rows) else [] for i in range(n)]
    inner = [part(x.inner, i + 1) + (1 if i < k else 0) for i in range(n)]
    return from_rows(rows, inner, order=x.order)


def kappa_dual(t: DualTableau, k: int) -> DualTableau:
    return DualTableau(kappa(t.base, k))


def iota_shift(s: Tableau, t: DualTableau, k: int) -> tuple[Tableau, DualTableau]:
    """(S, T) -> (S{k}, T{k}): column-insert the word 1..k into S and into
    the base of T."""

    def grow(x: Tableau) -> Tableau:
        for a in range(1, k + 1):
            x, _ = column_insert_with_cell(x, a)
        return x

    return grow(s), DualTableau(grow(t.base))


def iota_prime(s: Tableau, t: DualTableau, r: int = 0) -> BimatrixElement:
    """Row contents of psi(S, T): row i of X fills row i of N, row i of Y
    fills row i of M."""

    def row_table(x: Tableau) -> IntMatrix:
        table: dict[tuple[int, int], int] = {}
        for i, row in enumerate(x.rows, 1):
            for v in row:
                table[(i, v)] = table.get((i, v), 0) + 1
        return IntMatrix.of(table)

    y, x = psi(s, t, r)
    return BimatrixElement(row_table(y.base), row_table(x))


def peter_weyl_label(
    b: BimatrixElement,
) -> tuple[tuple[int, ...], tuple[int, ...], ExtremalPair, ExtremalPair]:
    """Component coordinates of a bimatrix element.

    RSK sends M to (P_M, Q_M) and N to (P_N, Q_N); the first structure
    lives on the P side and the transposed structure on the Q side, and
    each side composes into one extremal pair."""
    p_m, q_m = rsk(b.mdual.to_dict())
    p_n, q_n = rsk(b.n.to_dict())
    pair_e, _ = compose_factor(DualTableau(p_m), p_n)
    pair_t, _ = compose_factor(DualTableau(q_m), q_n)
    return p_n.outer, p_m.outer, pair_e, pair_t
