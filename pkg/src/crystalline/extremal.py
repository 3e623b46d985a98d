"""Extremal weight crystal pairs and pair insertion.

A pair (S, T) couples a plain straight tableau S with a dual tableau T,
both over letters in [r+1, oo).  The pairs whose first columns satisfy
the interlocking bound form one connected crystal; inserting plain
letters (a column sweep through T, then a column insertion into S) and
dual letters (a bounded row insertion into the base of T that may push
a cell out of S instead) decomposes tensor products of these crystals.
The recording tableaux of an insertion are constant on connected
components, which is what the decomposition maps exploit.
"""

from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass

from .crystal import wt_add
from .rsk import (
    _columns,
    _from_columns,
    column_insert_with_cell,
    remove_and_slide_with_exit,
    reverse_column_insert,
    row_insert_with_path,
)
from .shapes import SkewShape, partition
from .tableaux import (
    ZHAT,
    DualTableau,
    Tableau,
    extremal_dual,
    from_rows,
    highest_tableau,
)

# record of one dual-letter insertion: ("t", k) a cell appeared in row k of
# the base of T; ("s", k) a cell left row k of S
Record = tuple[str, int]


def first_column(t: Tableau) -> list[int]:
    return [t.entry(i, 1) for i in range(1, len(t.outer) + 1)]


def interlocked(s: Tableau, t_base: Tableau, r: int) -> bool:
    """For every k: |{i : S(i,1) <= r+k}| + |{i : t(i,1) <= r+k}| <= k."""
    scol = first_column(s)
    tcol = first_column(t_base)
    for k in range(1, len(scol) + len(tcol) + 1):
        bound = r + k
        if sum(v <= bound for v in scol) + sum(v <= bound for v in tcol) > k:
            return False
    return True


def _min_letter(t: Tableau) -> int | None:
    return min(t.content(), default=None)


@dataclass(frozen=True)
class ExtremalPair:
    """S tensor T with S plain and T dual, interlocked over [r+1, oo)."""

    s: Tableau
    t: DualTableau
    r: int = 0

    def __post_init__(self) -> None:
        if not self.s.is_straight() or not self.t.base.is_straight():
            raise ValueError("both members must have straight shapes")
        for m in (_min_letter(self.s), _min_letter(self.t.base)):
            if m is not None and m <= self.r:
                raise ValueError(f"letter {m} is not above {self.r}")
        if not interlocked(self.s, self.t.base, self.r):
            raise ValueError("first columns violate the interlocking bound")

    @property
    def mu(self) -> tuple[int, ...]:
        return self.s.outer

    @property
    def nu(self) -> tuple[int, ...]:
        return self.t.base.outer

    # crystal carrier protocol, tensor order S (x) T
    def signs(self, i: int) -> list[int]:
        return self.s.signs(i) + self.t.signs(i)

    def apply_at(self, i: int, k: int, up: bool) -> "ExtremalPair":
        n = len(self.s.signs(i))
        if k < n:
            return ExtremalPair(self.s.apply_at(i, k, up), self.t, self.r)
        return ExtremalPair(self.s, self.t.apply_at(i, k - n, up), self.r)

    def weight(self):
        return wt_add(self.s.weight(), self.t.weight())

    def key(self):
        return ("xpair", self.r, self.s.key(), self.t.key())


def empty_pair(r: int = 0) -> ExtremalPair:
    return ExtremalPair(from_rows([]), DualTableau(from_rows([])), r)


def plain_pair(s: Tableau, r: int = 0) -> ExtremalPair:
    return ExtremalPair(s, DualTableau(from_rows([])), r)


def dual_pair(t: DualTableau, r: int = 0) -> ExtremalPair:
    return ExtremalPair(from_rows([]), t, r)


def highest_pair(mu, nu, r: int = 0, s: int | None = None) -> ExtremalPair:
    """The generating element H_mu (x) E_nu(s); any s past the default
    gives the same component."""
    mu, nu = partition(mu), partition(nu)
    if s is None:
        s = r + len(mu) + len(nu)
    if s < r + len(nu):
        raise ValueError("column height parameter is too small for this alphabet")
    return ExtremalPair(highest_tableau(mu, base=r), extremal_dual(nu, s), r)


# --- insertion of a plain letter -------------------------------------------


def _sweep(cols: list[list[int]], a: int) -> int:
    """Column sweep through the base columns, last to first.  In a column
    containing v, the run v..b-1 shifts up to v+1..b for the first absent
    b, and b moves on; columns without v pass it through."""
    v = a
    for col in reversed(cols):
        if v in col:
            b = v + 1
            while b in col:
                b += 1
            col.remove(v)
            insort(col, b)
            v = b
    return v


def _unsweep(cols: list[list[int]], b: int) -> int:
    """Inverse sweep, first column to last: a column containing v turns the
    run a+1..v back into a..v-1 where a is just below the run."""
    v = b
    for col in cols:
        if v in col:
            a = v
            while a - 1 in col:
                a -= 1
            a -= 1
            col.remove(v)
            insort(col, a)
            v = a
    return v


def insert_letter(pair: ExtremalPair, a: int) -> tuple[ExtremalPair, int]:
    """a -> (S, T): sweep a through T, column-insert the survivor into S.
    Returns the new pair and the S row where the shape grew."""
    if a <= pair.r:
        raise ValueError(f"letter {a} is not above {pair.r}")
    cols = _columns(pair.t.base)
    out = _sweep(cols, a)
    new_s, cell = column_insert_with_cell(pair.s, out)
    return ExtremalPair(new_s, DualTableau(_from_columns(cols)), pair.r), cell[0]


# --- insertion of a dual letter --------------------------------------------


def dual_insert(pair: ExtremalPair, a: int) -> tuple[ExtremalPair, Record]:
    """(S, T) <- a dual: row-insert a into the base of T if the result
    stays interlocked; otherwise stop the bump chain just before the first
    step that would break the bound and evict the pending letter from the
    first column of S, closing the gap by jeu de taquin."""
    if a <= pair.r:
        raise ValueError(f"letter {a} is not above {pair.r}")
    base = pair.t.base
    full, path, new_cell = row_insert_with_path(base, a)
    if interlocked(pair.s, full, pair.r):
        return ExtremalPair(pair.s, DualTableau(full), pair.r), ("t", new_cell[0])
    rows = [list(row) for row in base.rows]
    for row_idx, incoming in path:
        prev = [row[:] for row in rows]
        i = row_idx - 1
        if i == len(rows):
            rows.append([incoming])
        else:
            row = rows[i]
            k = bisect_right(row, incoming)
            if k == len(row):
                row.append(incoming)
            else:
                row[k] = incoming
        if not interlocked(pair.s, from_rows(rows), pair.r):
            scol = first_column(pair.s)
            if incoming not in scol:
                raise RuntimeError("evicted letter missing from the first column")
            hit = scol.index(incoming) + 1
            new_s, exit_cell = remove_and_slide_with_exit(pair.s, (hit, 1))
            stopped = DualTableau(from_rows(prev))
            return ExtremalPair(new_s, stopped, pair.r), ("s", exit_cell[0])
    raise RuntimeError("full insertion broke the bound but no single step did")


# --- products and recordings ------------------------------------------------


def insert_pair(
    base: ExtremalPair, ins: ExtremalPair
) -> tuple[ExtremalPair, Tableau, Tableau]:
    """(S', T') -> (S, T) with recording (U, V): plain letters of S' go in
    first (U marks the S row each one grows, on the cell it came from),
    then the dual letters of T' (V marks -k for a cell appearing in row k
    of the base of T, +k for a cell leaving row k of S)."""
    pair = base
    u_cells: dict[tuple[int, int], int] = {}
    for cell, (v, _) in ins.s.column_word():
        pair, row = insert_letter(pair, v)
        u_cells[cell] = row
    v_cells: dict[tuple[int, int], int] = {}
    for cell, (v, _) in ins.t.column_word():
        pair, rec = dual_insert(pair, v)
        v_cells[cell] = -rec[1] if rec[0] == "t" else rec[1]
    sigma, tau = ins.mu, ins.nu
    u = from_rows(
        [[u_cells[(i, j)] for j in range(1, sigma[i - 1] + 1)] for i in range(1, len(sigma) + 1)]
    )
    v = from_rows(
        [[v_cells[(i, j)] for j in range(1, tau[i - 1] + 1)] for i in range(1, len(tau) + 1)],
        order=ZHAT,
    )
    return pair, u, v


def decompose_element(
    s: Tableau, t: DualTableau, r: int = 0
) -> tuple[ExtremalPair, Tableau]:
    """S (x) T -> ((empty, T) -> (S, empty)) with its recording W, a member
    of the C-set for (shape of S, shape of T)."""
    result, _, w = insert_pair(plain_pair(s, r), dual_pair(t, r))
    return result, w


def compose_factor(t: DualTableau, s: Tableau, r: int = 0) -> tuple[ExtremalPair, Tableau]:
    """T (x) S -> ((S, empty) -> (empty, T)); the recording U comes along
    for verification and always equals the highest tableau of shape S."""
    result, u, _ = insert_pair(dual_pair(t, r), plain_pair(s, r))
    return result, u


def canonical_factor(pair: ExtremalPair) -> tuple[DualTableau, Tableau]:
    """The inverse of compose_factor on its image: recover (T, S) with
    ((S, empty) -> (empty, T)) = pair.

    The recording of that insertion is the highest tableau, so the box
    created by the i-th letter sits in the row of the i-th cell of mu in
    column order; replaying backwards peels one box per letter with a
    reverse column insertion followed by the inverse sweep."""
    mu = pair.mu
    cells = list(SkewShape(mu).cells_by_column())
    cols = _columns(pair.t.base)
    s_part = pair.s
    letters: dict[tuple[int, int], int] = {}
    for cell in reversed(cells):
        row = cell[0]
        if row > len(s_part.outer) or s_part.outer[row - 1] == 0:
            raise ValueError("pair is not in the image of compose_factor")
        s_part, out = reverse_column_insert(s_part, (row, s_part.outer[row - 1]))
        letters[cell] = _unsweep(cols, out)
    if s_part.outer != ():
        raise ValueError("reverse replay left letters behind")
    s_rows = [[letters[(i, j)] for j in range(1, mu[i - 1] + 1)] for i in range(1, len(mu) + 1)]
    return DualTableau(_from_columns(cols)), from_rows(s_rows)
