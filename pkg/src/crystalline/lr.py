"""Littlewood-Richardson tableaux, their barred mirror, and C-sets.

An LR tableau of shape lam/mu and content nu is a semistandard filling
whose column word is a lattice word (every prefix holds at least as many
i's as (i+1)'s).  The barred variant uses negative letters and the
mirrored suffix condition.  C-sets encode recording tableaux of pair
insertions: fillings of nu over the zhat alphabet whose letters replay a
partition walk starting at mu.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .shapes import (
    SkewShape,
    bump_part,
    conjugate,
    contains,
    debump_part,
    is_partition,
    part,
    partition,
    size,
    trim,
)
from .switching import jmath_pair, skew_compose
from .tableaux import NAT, ZHAT, Tableau, from_rows, lowest_tableau


def is_lattice(word: Sequence[int]) -> bool:
    """Prefix counts of i dominate prefix counts of i+1."""
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts.get(v - 1, 0) < counts[v]:
            return False
    return True


def is_lattice_barred(word: Sequence[int]) -> bool:
    """Suffix counts of -i dominate suffix counts of -(i+1)."""
    counts: dict[int, int] = {}
    for v in reversed(word):
        counts[v] = counts.get(v, 0) + 1
        if v < -1 and counts.get(v + 1, 0) < counts[v]:
            return False
    return True


def content_partition(t: Tableau, sign: int = 1) -> tuple[int, ...]:
    """Content (count of sign*1, sign*2, ...) which must form a partition."""
    content = t.content()
    if not content:
        return ()
    vals = sorted(sign * v for v in content)
    top = vals[-1]
    if vals[0] < 1:
        raise ValueError("unexpected letters for this content")
    counts = tuple(content.get(sign * i, 0) for i in range(1, top + 1))
    if not is_partition(counts):
        raise ValueError(f"content {counts} is not a partition")
    return trim(counts)


def column_word_values(t: Tableau) -> list[int]:
    return [v for _, (v, _) in t.column_word()]


def is_lr(t: Tableau) -> bool:
    """Semistandard is guaranteed by the type; checks content + lattice."""
    try:
        content_partition(t)
    except ValueError:
        return False
    return is_lattice(column_word_values(t))


def is_lr_barred(t: Tableau) -> bool:
    try:
        content_partition(t, sign=-1)
    except ValueError:
        return False
    return is_lattice_barred(column_word_values(t))


def enumerate_lr(lam, mu, nu) -> list[Tableau]:
    """All LR tableaux of shape lam/mu and content nu, in lexicographic
    order of their column words."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(lam) != size(mu) + size(nu) or not contains(lam, mu):
        return []
    shape = SkewShape(lam, mu)
    cells = list(shape.cells_by_column())
    counts = [0] * (len(nu) + 1)
    entries: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def rec(k: int) -> None:
        if k == len(cells):
            rows = []
            for i in range(1, len(lam) + 1):
                lo, hi = shape.row_span(i)
                rows.append([entries[(i, j)] for j in range(lo, hi + 1)])
            out.append(from_rows(rows, mu))
            return
        i, j = cells[k]
        for v in range(1, len(nu) + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v - 1] < counts[v] + 1:
                continue
            if (i, j + 1) in entries and v > entries[(i, j + 1)]:
                continue
            if (i - 1, j) in entries and v <= entries[(i - 1, j)]:
                continue
            counts[v] += 1
            entries[(i, j)] = v
            rec(k + 1)
            del entries[(i, j)]
            counts[v] -= 1

    rec(0)
    return out


def lr_coefficient(lam, mu, nu) -> int:
    return len(enumerate_lr(lam, mu, nu))


def enumerate_lr_barred(lam, mu, nu) -> list[Tableau]:
    """All barred LR tableaux: shape lam/mu, content(-i) = nu_i, suffix
    lattice condition.  Cells are filled in reverse column-word order."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(lam) != size(mu) + size(nu) or not contains(lam, mu):
        return []
    shape = SkewShape(lam, mu)
    cells = list(shape.cells_by_column())[::-1]
    counts = [0] * (len(nu) + 1)
    entries: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def rec(k: int) -> None:
        if k == len(cells):
            rows = []
            for i in range(1, len(lam) + 1):
                lo, hi = shape.row_span(i)
                rows.append([entries[(i, j)] for j in range(lo, hi + 1)])
            out.append(from_rows(rows, mu))
            return
        i, j = cells[k]
        for m in range(len(nu), 0, -1):
            v = -m
            if counts[m] >= nu[m - 1]:
                continue
            if m > 1 and counts[m - 1] < counts[m] + 1:
                continue
            if (i, j - 1) in entries and v < entries[(i, j - 1)]:
                continue
            if (i + 1, j) in entries and v >= entries[(i + 1, j)]:
                continue
            counts[m] += 1
            entries[(i, j)] = v
            rec(k + 1)
            del entries[(i, j)]
            counts[m] -= 1

    rec(0)
    return out


# --- the bijection between dominant tensor factors and LR recorders -------


def imath(v: Tableau, mu) -> Tableau:
    """U with (number of k's in row i of v) = (number of i's in row k of U).

    v is a straight tableau with H_mu (x) v equivalent to H_lam; U is the LR
    tableau of shape lam/mu and content shape(v).  Raises when v is not
    dominant for mu (the construction then fails the LR conditions)."""
    mu = partition(mu)
    if not v.is_straight():
        raise ValueError("v must be straight")
    counts: dict[int, dict[int, int]] = {}
    for i in range(1, len(v.outer) + 1):
        for x in v.rows[i - 1]:
            counts.setdefault(x, {}).setdefault(i, 0)
            counts[x][i] += 1
    nrows = max(len(mu), max(counts, default=0))
    rows = []
    for k in range(1, nrows + 1):
        row: list[int] = []
        for i in sorted(counts.get(k, {})):
            row.extend([i] * counts[k][i])
        rows.append(row)
    u = from_rows(rows, mu)
    if trim(mu) != u.inner or not is_lr(u):
        raise ValueError("v is not dominant for mu")
    return u


def imath_inv(u: Tableau) -> Tableau:
    """Inverse of imath: rebuild v from the LR tableau u (mu = u.inner)."""
    counts: dict[int, dict[int, int]] = {}
    for k in range(1, len(u.outer) + 1):
        lo, hi = u.shape.row_span(k)
        for j in range(lo, hi + 1):
            i = u.entry(k, j)
            counts.setdefault(i, {}).setdefault(k, 0)
            counts[i][k] += 1
    nrows = max(counts, default=0)
    rows = []
    for i in range(1, nrows + 1):
        row: list[int] = []
        for k in sorted(counts.get(i, {})):
            row.extend([k] * counts[i][k])
        rows.append(row)
    return from_rows(rows)


def imath_inv_mu(u: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    return imath_inv(u), u.inner


# --- C-sets ---------------------------------------------------------------


def cset_walk(w: Tableau, mu) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Replay the recursion: consume the column word of w from its last
    letter backwards; positive v removes a cell from row v of alpha (which
    starts at mu), negative v adds a cell to row -v of beta.  Returns the
    final (sigma, tau), or None when some stage leaves the partition lattice."""
    if w.order != ZHAT:
        raise ValueError("C-set members live over the zhat alphabet")
    alpha: tuple[int, ...] | None = partition(mu)
    beta: tuple[int, ...] | None = ()
    for _, (v, _) in reversed(w.column_word()):
        if v > 0:
            alpha = debump_part(alpha, v)
        else:
            beta = bump_part(beta, -v)
        if alpha is None or beta is None:
            return None
    return alpha, beta


def cset_member(w: Tableau, mu, sigma=None, tau=None) -> bool:
    ends = cset_walk(w, mu)
    if ends is None:
        return False
    if sigma is not None and partition(sigma) != ends[0]:
        return False
    if tau is not None and partition(tau) != ends[1]:
        return False
    return True


def enumerate_cset(mu, nu) -> Iterator[tuple[Tableau, tuple[int, ...], tuple[int, ...]]]:
    """All C-set members W in SST_zhat(nu) for the start mu, with their
    (sigma, tau) endpoints.  Backtracking follows the consumption order of
    the recursion, pruning stages that leave the partition lattice."""
    mu, nu = partition(mu), partition(nu)
    shape = SkewShape(nu)
    cells = list(shape.cells_by_column())[::-1]
    neg_limit = size(nu)
    letters = list(range(1, len(mu) + 1)) + list(range(-neg_limit, 0))

    def zkey(v: int):
        return (0, v) if v > 0 else (1, v)

    entries: dict[tuple[int, int], int] = {}

    def rec(k: int, alpha: tuple[int, ...], beta: tuple[int, ...]) -> Iterator[
        tuple[Tableau, tuple[int, ...], tuple[int, ...]]
    ]:
        if k == len(cells):
            rows = [
                [entries[(i, j)] for j in range(1, nu[i - 1] + 1)]
                for i in range(1, len(nu) + 1)
            ]
            yield from_rows(rows, order=ZHAT), alpha, beta
            return
        i, j = cells[k]
        for v in sorted(letters, key=zkey):
            if (i, j - 1) in entries and zkey(v) < zkey(entries[(i, j - 1)]):
                continue
            if (i + 1, j) in entries and zkey(v) >= zkey(entries[(i + 1, j)]):
                continue
            if v > 0:
                a2, b2 = debump_part(alpha, v), beta
            else:
                a2, b2 = alpha, bump_part(beta, -v)
            if a2 is None or b2 is None:
                continue
            entries[(i, j)] = v
            yield from rec(k + 1, a2, b2)
            del entries[(i, j)]

    yield from rec(0, mu, ())


def cset_multiplicities(mu, nu) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for _, sigma, tau in enumerate_cset(mu, nu):
        out[(sigma, tau)] = out.get((sigma, tau), 0) + 1
    return out


def pair_lr_sum(mu, sigma, nu, tau) -> int:
    """sum over lam of c^mu_{sigma lam} c^nu_{tau lam}."""
    mu, sigma, nu, tau = (partition(x) for x in (mu, sigma, nu, tau))
    total = 0
    rest = size(mu) - size(sigma)
    if rest != size(nu) - size(tau) or rest < 0:
        return 0
    from .shapes import partitions_of

    for lam in partitions_of(rest):
        total += lr_coefficient(mu, sigma, lam) * lr_coefficient(nu, tau, lam)
    return total


def cset_split(w: Tableau) -> tuple[Tableau, Tableau]:
    """Split W into its positive straight part (over the naturals) and its
    negative skew part (over the negatives)."""
    pos_rows: list[list[int]] = []
    neg_rows: list[list[int]] = []
    for row in w.rows:
        pos_rows.append([v for v in row if v > 0])
        neg_rows.append([v for v in row if v < 0])
    lam = trim(tuple(len(r) for r in pos_rows))
    for i, row in enumerate(w.rows):
        if list(row[: part(lam, i + 1)]) != pos_rows[i]:
            raise ValueError("positive letters are not an initial segment")
    w_plus = from_rows(pos_rows)
    w_minus = from_rows(neg_rows, lam)
    return w_plus, w_minus


def cset_bijection(w: Tableau, mu) -> tuple[Tableau, Tableau]:
    """W -> (W1, W2) with W1 = imath(W+) in LR^mu_{sigma lam} and
    W2 = j(W-)_R in LR^nu_{tau lam}."""
    ends = cset_walk(w, mu)
    if ends is None:
        raise ValueError("w is not a C-set member for this mu")
    sigma, tau = ends
    w_plus, w_minus = cset_split(w)
    w1 = imath(w_plus, sigma)
    if w1.outer != partition(mu):
        raise ValueError("positive part does not rebuild mu")
    straight, w2 = jmath_pair(w_minus)
    if straight != lowest_tableau(tau):
        raise ValueError("negative part does not rewind to the lowest tableau")
    return w1, w2


def cset_bijection_inv(w1: Tableau, w2: Tableau) -> Tableau:
    """Inverse: W1 in LR^mu_{sigma lam}, W2 in LR^nu_{tau lam} -> W."""
    lam = content_partition(w1)
    if content_partition(w2) != lam:
        raise ValueError("the two recorders carry different lambda contents")
    w_plus = imath_inv(w1)
    tau = w2.inner
    w_minus = skew_compose(lowest_tableau(tau), w2)
    if w_minus.inner != lam:
        raise ValueError("negative part does not sit on lambda")
    rows = []
    for i in range(1, len(w_minus.outer) + 1):
        pos = list(w_plus.rows[i - 1]) if i <= len(w_plus.outer) else []
        rows.append(pos + list(w_minus.rows[i - 1]))
    return from_rows(rows, order=ZHAT)
