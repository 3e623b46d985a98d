"""Schensted insertion, RSK for nonnegative integer matrices, jeu de taquin.

Insertions work on straight-shape tableaux over any natural-order integer
alphabet.  Row insertion bumps the smallest entry strictly greater than the
incoming letter; column insertion bumps the smallest entry greater than or
equal to it.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .shapes import SkewShape, trim
from .tableaux import NAT, Tableau, from_rows


def _rows(t: Tableau) -> list[list[int]]:
    if not t.is_straight():
        raise ValueError("insertion needs a straight shape")
    return [list(r) for r in t.rows]


def row_insert_with_path(t: Tableau, a: int) -> tuple[Tableau, list[tuple[int, int]], tuple[int, int]]:
    """Row-insert a; return (tableau, bump path, new cell).  The path lists
    (row, incoming letter) for every row the bump visits, the new cell is
    where the shape grew."""
    rows = _rows(t)
    path: list[tuple[int, int]] = []
    v = a
    for i, row in enumerate(rows):
        path.append((i + 1, v))
        k = bisect_right(row, v)
        if k == len(row):
            row.append(v)
            return from_rows(rows), path, (i + 1, len(row))
        v, row[k] = row[k], v
    rows.append([v])
    path.append((len(rows), v))
    return from_rows(rows), path, (len(rows), 1)


def row_insert(t: Tableau, a: int) -> Tableau:
    return row_insert_with_path(t, a)[0]


def _columns(t: Tableau) -> list[list[int]]:
    if not t.is_straight():
        raise ValueError("insertion needs a straight shape")
    outer = t.outer
    width = outer[0] if outer else 0
    return [[t.entry(i, j) for i in range(1, len(outer) + 1) if (i, j) in t.shape]
            for j in range(1, width + 1)]


def _from_columns(cols: list[list[int]]) -> Tableau:
    cols = [c for c in cols if c]
    outer = trim(tuple(sum(1 for c in cols if len(c) >= i) for i in range(1, 1 + max((len(c) for c in cols), default=0))))
    rows = [[cols[j][i] for j in range(len(cols)) if len(cols[j]) > i] for i in range(len(outer))]
    return from_rows(rows)


def column_insert_with_cell(t: Tableau, a: int) -> tuple[Tableau, tuple[int, int]]:
    """Column-insert a; return (tableau, new cell)."""
    cols = _columns(t)
    v = a
    j = 0
    while True:
        if j == len(cols):
            cols.append([v])
            return _from_columns(cols), (1, j + 1)
        col = cols[j]
        k = bisect_left(col, v)
        if k == len(col):
            col.append(v)
            return _from_columns(cols), (len(col), j + 1)
        v, col[k] = col[k], v
        j += 1


def column_insert(t: Tableau, a: int) -> Tableau:
    return column_insert_with_cell(t, a)[0]


def reverse_column_insert(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo a column insertion that created the given cell; return the
    smaller tableau and the letter that was inserted."""
    i0, j0 = cell
    cols = _columns(t)
    if j0 < 1 or j0 > len(cols) or len(cols[j0 - 1]) != i0:
        raise ValueError(f"cell {cell} is not the bottom of column {j0}")
    x = cols[j0 - 1].pop()
    for j in range(j0 - 2, -1, -1):
        col = cols[j]
        k = bisect_right(col, x) - 1
        if k < 0:
            raise ValueError("reverse insertion fell off a column")
        col[k], x = x, col[k]
    return _from_columns(cols), x


def rsk(entries: dict[tuple[int, int], int]) -> tuple[Tableau, Tableau]:
    """RSK of a nonnegative integer matrix given by sparse entries.

    The biword takes pairs (i, j) with multiplicity a_ij in lexicographic
    order; the j letters are row-inserted into P and each new cell of P is
    recorded with i in Q.  Both tableaux share one shape.
    """
    p = from_rows([])
    q_cells: dict[tuple[int, int], int] = {}
    for (i, j), m in sorted(entries.items()):
        if m < 0:
            raise ValueError("matrix entries must be nonnegative")
        for _ in range(m):
            p, _, cell = row_insert_with_path(p, j)
            q_cells[cell] = i
    outer = p.outer
    q_rows = [[q_cells[(r, c)] for c in range(1, outer[r - 1] + 1)] for r in range(1, len(outer) + 1)]
    return p, from_rows(q_rows)


# --- jeu de taquin ---------------------------------------------------------


def _cells_map(t: Tableau) -> dict[tuple[int, int], int]:
    return {cell: t.entry(*cell) for cell in t.shape.cells()}


def _slide(cells: dict[tuple[int, int], int], hole: tuple[int, int]) -> tuple[int, int]:
    """Slide a hole to the outer boundary; cells is mutated.  Returns the
    final (vacated) position, which leaves the diagram."""
    i, j = hole
    while True:
        below = cells.get((i + 1, j))
        right = cells.get((i, j + 1))
        if below is None and right is None:
            return (i, j)
        # vertical move when below <= right keeps columns strict
        if right is None or (below is not None and below <= right):
            cells[(i, j)] = below
            del cells[(i + 1, j)]
            i += 1
        else:
            cells[(i, j)] = right
            del cells[(i, j + 1)]
            j += 1


def _tableau_from_cells(cells: dict[tuple[int, int], int], order: str = NAT) -> Tableau:
    if not cells:
        return from_rows([])
    nrows = max(i for i, _ in cells)
    outer = []
    inner = []
    rows = []
    for i in range(1, nrows + 1):
        js = sorted(j for (r, j) in cells if r == i)
        if js and js != list(range(js[0], js[0] + len(js))):
            raise ValueError("cells do not form contiguous rows")
        inner.append(js[0] - 1 if js else 0)
        outer.append(js[-1] if js else 0)
        rows.append(tuple(cells[(i, j)] for j in js))
    # empty rows inside the shape keep inner = outer at that row
    for i in range(nrows):
        if not rows[i]:
            span = max(outer[i:] or [0])
            inner[i] = outer[i] = span
    return Tableau(SkewShape(trim(tuple(outer)), trim(tuple(inner))), tuple(rows), order)


def remove_and_slide_with_exit(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, tuple[int, int]]:
    """Delete one entry and close the gap by jeu de taquin; also return the
    outer cell vacated by the slide."""
    cells = _cells_map(t)
    if cell not in cells:
        raise ValueError(f"no cell {cell}")
    del cells[cell]
    exit_cell = _slide(cells, cell)
    return _tableau_from_cells(cells, t.order), exit_cell


def remove_and_slide(t: Tableau, cell: tuple[int, int]) -> Tableau:
    """Delete one entry and close the gap by jeu de taquin."""
    return remove_and_slide_with_exit(t, cell)[0]


def rectify(t: Tableau) -> Tableau:
    """Jeu de taquin rectification to a straight shape.  The inner corner
    choice is deterministic (bottom-most removable cell of the inner shape);
    the result does not depend on it."""
    cells = _cells_map(t)
    inner = list(t.inner)
    while inner:
        corners = [
            (i, inner[i - 1])
            for i in range(1, len(inner) + 1)
            if inner[i - 1] > 0 and (i == len(inner) or inner[i] < inner[i - 1])
        ]
        i, j = corners[-1]
        _slide(cells, (i, j))
        inner[i - 1] -= 1
        inner = list(trim(inner))
    return _tableau_from_cells(cells, t.order)
