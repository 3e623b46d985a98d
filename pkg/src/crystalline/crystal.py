"""Kashiwara operators via the signature rule, generic over carriers.

Every crystal carrier implements three methods:

  signs(i)            list of +1/-1/0 contributions, one per stream slot,
                      ordered so that concatenating tensor factors left to
                      right gives the tensor-product rule;
  apply_at(i, k, up)  new element with slot k raised (up=True) or lowered;
  weight()            Weight as (level, {index: coefficient}).

The bracket rule cancels each "+" against the nearest following "-";
e_i raises the rightmost surviving "-", f_i lowers the leftmost
surviving "+".  Tableaux act through their column words (columns read
right to left, top to bottom); a dual tableau reads the reversed base
word with dualized letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .tableaux import DualTableau, Letter, Tableau

Weight = tuple[int, dict[int, int]]


def wt_zero() -> Weight:
    return (0, {})


def wt_add(a: Weight, b: Weight) -> Weight:
    coeffs = dict(a[1])
    for k, v in b[1].items():
        coeffs[k] = coeffs.get(k, 0) + v
    return (a[0] + b[0], {k: v for k, v in coeffs.items() if v})


def wt_negate(a: Weight) -> Weight:
    return (-a[0], {k: -v for k, v in a[1].items()})


def pairing_h(wt: Weight, i: int) -> int:
    """<wt, h_i> = c_i - c_{i+1} (+ level when i = 0, for gl_oo weights)."""
    level, c = wt
    return c.get(i, 0) - c.get(i + 1, 0) + (level if i == 0 else 0)


def wt_project(wt: Weight, window: tuple[int, int]) -> Weight:
    p, q = window
    return (wt[0], {k: v for k, v in wt[1].items() if p <= k <= q})


def letter_sign(letter: Letter, i: int) -> int:
    v, dual = letter
    if not dual:
        if v == i:
            return 1
        if v == i + 1:
            return -1
    else:
        if v == i + 1:
            return 1
        if v == i:
            return -1
    return 0


def raise_letter(letter: Letter, i: int) -> Letter:
    v, dual = letter
    if not dual:
        assert v == i + 1
        return (i, False)
    assert v == i
    return (i + 1, True)


def lower_letter(letter: Letter, i: int) -> Letter:
    v, dual = letter
    if not dual:
        assert v == i
        return (i + 1, False)
    assert v == i + 1
    return (i, True)


def bracket(signs: list[int]) -> tuple[list[int], list[int]]:
    """Positions of surviving '+' and '-' after cancellation."""
    plus: list[int] = []
    minus: list[int] = []
    for pos, s in enumerate(signs):
        if s > 0:
            plus.append(pos)
        elif s < 0:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return plus, minus


def eps(x, i: int) -> int:
    return len(bracket(x.signs(i))[1])


def phi(x, i: int) -> int:
    return len(bracket(x.signs(i))[0])


def e_op(x, i: int):
    """Kashiwara raising operator; None when it vanishes."""
    _, minus = bracket(x.signs(i))
    return x.apply_at(i, minus[-1], True) if minus else None


def f_op(x, i: int):
    """Kashiwara lowering operator; None when it vanishes."""
    plus, _ = bracket(x.signs(i))
    return x.apply_at(i, plus[0], False) if plus else None


def weight(x) -> Weight:
    return x.weight()


# --- carriers -------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    """A finite tensor product of single letters, leftmost factor first."""

    letters: tuple[Letter, ...]

    @staticmethod
    def of(values: Iterable[int]) -> "Word":
        return Word(tuple((v, False) for v in values))

    def signs(self, i: int) -> list[int]:
        return [letter_sign(l, i) for l in self.letters]

    def apply_at(self, i: int, k: int, up: bool) -> "Word":
        ls = list(self.letters)
        ls[k] = raise_letter(ls[k], i) if up else lower_letter(ls[k], i)
        return Word(tuple(ls))

    def weight(self) -> Weight:
        wt = wt_zero()
        for v, dual in self.letters:
            wt = wt_add(wt, (0, {v: -1 if dual else 1}))
        return wt

    def key(self):
        return ("word", self.letters)


@dataclass(frozen=True)
class Tensor:
    """Two-factor tensor product; nest for longer products."""

    left: object
    right: object

    def signs(self, i: int) -> list[int]:
        return self.left.signs(i) + self.right.signs(i)

    def apply_at(self, i: int, k: int, up: bool) -> "Tensor":
        n = len(self.left.signs(i))
        if k < n:
            return Tensor(self.left.apply_at(i, k, up), self.right)
        return Tensor(self.left, self.right.apply_at(i, k - n, up))

    def weight(self) -> Weight:
        return wt_add(self.left.weight(), self.right.weight())

    def key(self):
        return ("tensor", element_key(self.left), element_key(self.right))


def element_key(x):
    """Canonical hashable form of a carrier, for visited-set bookkeeping."""
    return x.key() if hasattr(x, "key") else x


# --- tableau crystal structure (attached here to keep tableaux.py inert) --


def _tab_signs(t: Tableau, i: int) -> list[int]:
    return [letter_sign(letter, i) for _, letter in t.column_word()]


def _tab_apply(t: Tableau, i: int, k: int, up: bool) -> Tableau:
    (ci, cj), letter = t.column_word()[k]
    new = raise_letter(letter, i) if up else lower_letter(letter, i)
    return t.with_entry(ci, cj, new[0])


def _tab_weight(t: Tableau) -> Weight:
    return (0, {v: c for v, c in t.content().items() if c})


def _tab_key(t: Tableau):
    return ("tab", t.outer, t.inner, t.rows)


Tableau.signs = _tab_signs  # type: ignore[attr-defined]
Tableau.apply_at = _tab_apply  # type: ignore[attr-defined]
Tableau.weight = _tab_weight  # type: ignore[attr-defined]
Tableau.key = _tab_key  # type: ignore[attr-defined]


def _dual_signs(t: DualTableau, i: int) -> list[int]:
    return [letter_sign(letter, i) for _, letter in t.column_word()]


def _dual_apply(t: DualTableau, i: int, k: int, up: bool) -> DualTableau:
    (ci, cj), letter = t.column_word()[k]
    new = raise_letter(letter, i) if up else lower_letter(letter, i)
    return DualTableau(t.base.with_entry(ci, cj, new[0]))


def _dual_weight(t: DualTableau) -> Weight:
    return wt_negate(_tab_weight(t.base))


def _dual_key(t: DualTableau):
    return ("dual",) + _tab_key(t.base)[1:]


DualTableau.signs = _dual_signs  # type: ignore[attr-defined]
DualTableau.apply_at = _dual_apply  # type: ignore[attr-defined]
DualTableau.weight = _dual_weight  # type: ignore[attr-defined]
DualTableau.key = _dual_key  # type: ignore[attr-defined]


# --- component exploration ------------------------------------------------

DEFAULT_NODE_CAP = 10**6


class NodeCapExceeded(RuntimeError):
    pass


def colors(window: tuple[int, int]) -> range:
    p, q = window
    return range(p, q)


@dataclass
class Component:
    """A connected component explored over a color window."""

    nodes: dict  # key -> element
    edges: list  # (source key, color, target key), f-direction
    start_key: object


def explore_component(
    x, window: tuple[int, int], node_cap: int = DEFAULT_NODE_CAP
) -> Component:
    """BFS closure of x under e_i/f_i for window colors.  Deterministic:
    the frontier is processed in sorted key order."""
    start = element_key(x)
    nodes = {start: x}
    edges: list = []
    frontier = [start]
    while frontier:
        frontier = sorted(frontier)
        new_frontier = []
        for k in frontier:
            el = nodes[k]
            for i in colors(window):
                for up in (True, False):
                    y = e_op(el, i) if up else f_op(el, i)
                    if y is None:
                        continue
                    ky = element_key(y)
                    edges.append((ky, i, k) if up else (k, i, ky))
                    if ky not in nodes:
                        if len(nodes) >= node_cap:
                            raise NodeCapExceeded(f"component exceeds {node_cap} nodes")
                        nodes[ky] = y
                        new_frontier.append(ky)
        frontier = new_frontier
    edges = sorted(set(edges))
    return Component(nodes, edges, start)


def equivalent(x, y, window: tuple[int, int], node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """Crystal equivalence over the window: synchronized exploration checking
    weights (projected to the window), string lengths, and edge structure."""
    kx, ky = element_key(x), element_key(y)
    seen = {kx: ky}
    queue = [(x, y)]
    count = 0
    while queue:
        a, b = queue.pop()
        if wt_project(a.weight(), window) != wt_project(b.weight(), window):
            return False
        for i in colors(window):
            if eps(a, i) != eps(b, i) or phi(a, i) != phi(b, i):
                return False
            for up in (True, False):
                na = e_op(a, i) if up else f_op(a, i)
                nb = e_op(b, i) if up else f_op(b, i)
                if (na is None) != (nb is None):
                    return False
                if na is None:
                    continue
                ka, kb = element_key(na), element_key(nb)
                if ka in seen:
                    if seen[ka] != kb:
                        return False
                    continue
                seen[ka] = kb
                count += 1
                if count > node_cap:
                    raise NodeCapExceeded(f"equivalence search exceeds {node_cap} nodes")
                queue.append((na, nb))
    return True


def is_highest(x, window: tuple[int, int]) -> bool:
    return all(eps(x, i) == 0 for i in colors(window))


def component_to_dot(comp: Component) -> str:
    """Deterministic DOT rendering: nodes are numbered in sorted key order."""
    order = {k: n for n, k in enumerate(sorted(comp.nodes, key=repr))}
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for k in sorted(order, key=order.get):
        label = repr(k).replace('"', "'")
        shape = "doubleoctagon" if k == comp.start_key else "box"
        lines.append(f'  n{order[k]} [label="{label}", shape={shape}];')
    for src, i, dst in comp.edges:
        lines.append(f'  n{order[src]} -> n{order[dst]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)
