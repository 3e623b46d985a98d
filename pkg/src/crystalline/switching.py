"""Tableau switching: two families of letters move through each other.

A glued tableau fills a skew region with cells tagged by family 0 or 1,
each family semistandard on its own.  A switch swaps two adjacent cells
of different families when the mover sits above or to the left, provided
the two family conditions still hold:

  (S1) same-family entries weakly increase toward the south-east
       (value(i,j) <= value(i',j') whenever i <= i' and j <= j');
  (S2) same-family entries in one column are strictly increasing.

Running switches to exhaustion moves the inner family past the outer
one; the terminal configuration is independent of the switch order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .shapes import SkewShape, contains, part, partition, trim
from .tableaux import Tableau, from_rows

Cell = tuple[int, int]


@dataclass(frozen=True)
class Glued:
    """A two-family filling of the region outer/inner."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    cells: tuple[tuple[Cell, int, int], ...]  # (cell, family, value), sorted

    @staticmethod
    def of(outer, inner, mapping: dict[Cell, tuple[int, int]]) -> "Glued":
        region = SkewShape(partition(outer), partition(inner))
        if set(mapping) != set(region.cells()):
            raise ValueError("cell mapping does not cover the region")
        cells = tuple(sorted((c, fam, val) for c, (fam, val) in mapping.items()))
        g = Glued(region.outer, region.inner, cells)
        if not g.satisfies_conditions():
            raise ValueError("family conditions violated")
        return g

    def mapping(self) -> dict[Cell, tuple[int, int]]:
        return {c: (fam, val) for c, fam, val in self.cells}

    def satisfies_conditions(self) -> bool:
        for fam in (0, 1):
            cells = sorted((c, v) for c, f, v in self.cells if f == fam)
            for a, ((i, j), u) in enumerate(cells):
                for (ii, jj), w in cells[a + 1:]:
                    if ii >= i and jj >= j and w < u:
                        return False
                    if jj == j and ii > i and w <= u:
                        return False
        return True

    def family_region(self, fam: int) -> list[Cell]:
        return [c for c, f, _ in self.cells if f == fam]


def glue(inner_tab: Tableau, outer_tab: Tableau) -> Glued:
    """Glue two tableaux sharing a boundary: inner_tab's outer shape must be
    outer_tab's inner shape.  inner_tab becomes family 0, outer_tab family 1."""
    if inner_tab.outer != outer_tab.inner:
        raise ValueError(
            f"shapes do not meet: {inner_tab.outer} vs inner {outer_tab.inner}"
        )
    mapping: dict[Cell, tuple[int, int]] = {}
    for cell in inner_tab.shape.cells():
        mapping[cell] = (0, inner_tab.entry(*cell))
    for cell in outer_tab.shape.cells():
        mapping[cell] = (1, outer_tab.entry(*cell))
    return Glued.of(outer_tab.outer, inner_tab.inner, mapping)


def _try_switch(mapping: dict[Cell, tuple[int, int]], a: Cell, b: Cell, outer, inner) -> bool:
    mapping[a], mapping[b] = mapping[b], mapping[a]
    g = Glued(outer, inner, tuple(sorted((c, fam, val) for c, (fam, val) in mapping.items())))
    if g.satisfies_conditions():
        return True
    mapping[a], mapping[b] = mapping[b], mapping[a]
    return False


def switch_run(g: Glued, mover: int) -> Glued:
    """Exhaust all switches that move `mover` cells below or right of the
    other family.  Scan order: columns left to right, bottom to top inside a
    column, repeated to a fixpoint; the terminal state is order-independent."""
    mapping = g.mapping()
    width = g.outer[0] if g.outer else 0
    height = len(g.outer)
    changed = True
    while changed:
        changed = False
        for j in range(1, width + 1):
            for i in range(height, 0, -1):
                cell = (i, j)
                if cell not in mapping or mapping[cell][0] != mover:
                    continue
                for target in ((i + 1, j), (i, j + 1)):
                    if target in mapping and mapping[target][0] != mover:
                        if _try_switch(mapping, cell, target, g.outer, g.inner):
                            changed = True
                            break
    return Glued.of(g.outer, g.inner, mapping)


def split_terminal(g: Glued, inner_fam: int) -> tuple[Tableau, Tableau]:
    """Split a terminal glued tableau into (inner part, outer part), checking
    that inner_fam occupies a sub-skew-shape next to the region's inner rim."""
    mapping = g.mapping()
    nrows = len(g.outer)
    mid = []
    for i in range(1, nrows + 1):
        js = sorted(j for (r, j) in mapping if r == i and mapping[(r, j)][0] == inner_fam)
        lo = part(g.inner, i)
        if js and (js[0] != lo + 1 or js != list(range(js[0], js[0] + len(js)))):
            raise ValueError("inner family is not left-justified against the rim")
        mid.append(lo + len(js))
    from .shapes import is_partition

    if not is_partition(mid):
        raise ValueError("inner family does not fill a partition-shaped region")
    mid_p = trim(tuple(mid))
    if not (contains(g.outer, mid_p) and contains(mid_p, g.inner)):
        raise ValueError("terminal split is not a partition chain")
    inner_rows = []
    outer_rows = []
    for i in range(1, nrows + 1):
        lo, hi = part(g.inner, i), part(mid_p, i)
        inner_rows.append([mapping[(i, j)][1] for j in range(lo + 1, hi + 1)])
        outer_rows.append([mapping[(i, j)][1] for j in range(hi + 1, part(g.outer, i) + 1)])
    inner_tab = from_rows(inner_rows, g.inner)
    outer_tab = from_rows(outer_rows, mid_p)
    return inner_tab, outer_tab


def switch(inner_tab: Tableau, outer_tab: Tableau) -> tuple[Tableau, Tableau]:
    """Full switching: returns (outer_tab', inner_tab') where the families
    have traded places around the middle boundary."""
    g = glue(inner_tab, outer_tab)
    term = switch_run(g, mover=0)
    new_inner, new_outer = split_terminal(term, inner_fam=1)
    return new_inner, new_outer


def jmath_pair(t: Tableau) -> tuple[Tableau, Tableau]:
    """For a skew tableau t of shape lambda/mu: switch it past the highest
    tableau H_mu.  Returns (j(t), j(t)_R): the rectification of t and the
    Littlewood-Richardson recorder of shape lambda/nu and content mu."""
    from .tableaux import highest_tableau

    if not t.inner:
        return t, from_rows([[] for _ in t.outer], inner=t.outer)
    h = highest_tableau(t.inner)
    return switch(h, t)


def jmath(t: Tableau) -> Tableau:
    return jmath_pair(t)[0]


def jmath_r(t: Tableau) -> Tableau:
    return jmath_pair(t)[1]


def skew_compose(straight: Tableau, recorder: Tableau) -> Tableau:
    """Inverse of jmath_pair: rebuild the skew tableau t with jmath(t) =
    straight and jmath_r(t) = recorder.  The recorder must rewind to a
    highest tableau, which becomes the inner shape."""
    from .tableaux import highest_tableau

    if recorder.inner != straight.outer:
        raise ValueError("recorder's inner shape must match the straight shape")
    if recorder.size == 0:
        return straight
    g = glue(straight, recorder)
    term = switch_run(g, mover=0)
    new_inner, new_outer = split_terminal(term, inner_fam=1)
    mu = new_inner.outer
    if new_inner != highest_tableau(mu):
        raise ValueError("recorder does not rewind to a highest-weight tableau")
    return new_outer
