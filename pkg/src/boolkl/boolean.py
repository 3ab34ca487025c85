"""Boolean expressions, canonical reduced subwords, and pair diagrams.

A boolean reflection of a rooted tree graph is t = x_1 ... x_{n-1} r
x_{n-1} ... x_1 where the left half lists the non-root vertices with
every child before its parent (we use smallest-index-first depth-first
post-order, which is deterministic; any children-before-parents order
gives the same element since incomparable vertices commute).  For a
cycle with center c the word walks the arc from the far neighbor of c
around to c and mirrors, giving length 2n+1.

For u <= v <= t the canonical reduced subwords (v-bar inside t, u-bar
inside v-bar) place every free single occurrence in its leftmost
admissible slot; operationally each is the lexicographically least
position tuple whose letters spell the element, found by a greedy scan
with a feasibility check.

The diagram of the pair records, per graph vertex, the occurrence count
of v-bar (top) and u-bar (bottom) with side tags: 1l left of the center
of t, 1r right of it, the root/center counting as left.  A top 1r is
capitalized to 1R when the bottom of the column to the right (the graph
parent) is nonzero.  A column is marked with the parabolic set J or not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CoxeterGraph
from .words import Word, WordEngine


class NoRoot(ValueError):
    pass


class NotBelow(ValueError):
    """u is not below v (or v not below t) in Bruhat order."""


@dataclass(frozen=True)
class BooleanExpression:
    graph: CoxeterGraph
    root: int
    word: Word
    center_index: int

    def side_of(self, position: int) -> str:
        return "l" if position <= self.center_index else "r"


def boolean_expression(graph: CoxeterGraph, root: int | None = None) -> BooleanExpression:
    """The boolean reflection word of the tree rooted at root (or the
    cycle centered there)."""
    if root is None:
        root = graph.root
    if root is None:
        raise NoRoot("graph carries no root and none was given")
    if graph.mode == "cycle":
        left = graph.cycle_order(root)
    else:
        left = []
        seen = {root}

        def visit(v: int):
            seen.add(v)
            for w in sorted(graph.neighbors(v)):
                if w not in seen:
                    visit(w)
            if v != root:
                left.append(v)

        visit(root)
    word = tuple(left) + (root,) + tuple(reversed(left))
    return BooleanExpression(graph, root, word, len(left))


def enumerate_boolean(
    engine: WordEngine, t: BooleanExpression, J: frozenset[int] = frozenset()
) -> list[Word]:
    """All boolean elements below t, optionally restricted to W^J.

    Returned as canonical words ordered by (length, word).
    """
    elements = engine.subword_elements(t.word)
    if J:
        elements = [w for w in elements if engine.in_quotient(J, w)]
    return sorted(elements, key=lambda w: (len(w), w))


class _Embedder:
    """Greedy lex-least embedding of an element into a fixed super word."""

    def __init__(self, engine: WordEngine, super_word: Word):
        self.engine = engine
        self.super_word = super_word
        self._memo: dict[tuple[Word, int], bool] = {}

    def _fits(self, x: Word, i: int) -> bool:
        """Can x embed as a subword of super_word[i:]?"""
        if not x:
            return True
        if len(x) > len(self.super_word) - i:
            return False
        key = (x, i)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        E = self.engine
        s = self.super_word[i]
        out = self._fits(x, i + 1) or (
            s in E.left_descents(x) and self._fits(E._strip_left(x, s), i + 1)
        )
        self._memo[key] = out
        return out

    def embed(self, x: Word) -> tuple[int, ...] | None:
        """Lexicographically least position tuple spelling x, or None."""
        E = self.engine
        x = E.reduce(x)
        if not self._fits(x, 0):
            return None
        positions = []
        i = 0
        while x:
            s = self.super_word[i]
            if s in E.left_descents(x):
                rest = E._strip_left(x, s)
                if self._fits(rest, i + 1):
                    positions.append(i)
                    x = rest
            i += 1
        return tuple(positions)


def canonical_subword(engine: WordEngine, super_word: Word, x: Word) -> tuple[int, ...]:
    """Positions of the canonical occurrence of x inside super_word."""
    pos = _Embedder(engine, super_word).embed(x)
    if pos is None:
        raise NotBelow(f"{x} is not below the word {super_word}")
    return pos


def canonicalize(engine: WordEngine, t: BooleanExpression, v: Word) -> Word:
    """The canonical reduced subword of t spelling the element of v."""
    pos = canonical_subword(engine, t.word, v)
    return tuple(t.word[p] for p in pos)


@dataclass(frozen=True)
class CanonicalPair:
    """Canonical subwords of a boolean pair u <= v <= t with their slots."""

    t: BooleanExpression
    v_positions: tuple[int, ...]  # positions into t.word
    u_positions: tuple[int, ...]  # positions into t.word (subset of v_positions)

    @property
    def vbar(self) -> Word:
        return tuple(self.t.word[p] for p in self.v_positions)

    @property
    def ubar(self) -> Word:
        return tuple(self.t.word[p] for p in self.u_positions)


def canonicalize_pair(
    engine: WordEngine,
    t: BooleanExpression,
    v: Word,
    u: Word,
) -> CanonicalPair:
    v_pos = canonical_subword(engine, t.word, v)
    vbar = tuple(t.word[p] for p in v_pos)
    u_pos_in_v = _Embedder(engine, vbar).embed(u)
    if u_pos_in_v is None:
        raise NotBelow(f"{u} is not below {v}")
    u_pos = tuple(v_pos[i] for i in u_pos_in_v)
    return CanonicalPair(t, v_pos, u_pos)


@dataclass(frozen=True)
class Column:
    letter: int
    top: str  # "0", "1l", "1r", "1R", "2"
    bot: str  # "0", "1l", "1r", "2"
    in_J: bool

    @property
    def mark(self) -> str:
        return "o" if self.in_J else "x"


@dataclass(frozen=True)
class Diagram:
    graph: CoxeterGraph
    root: int
    columns: dict[int, Column]
    parent: dict[int, int | None]
    is_cycle: bool

    def top(self, v: int) -> str:
        return self.columns[v].top

    def bot(self, v: int) -> str:
        return self.columns[v].bot

    def children(self, v: int) -> list[int]:
        return [w for w, p in self.parent.items() if p == v]

    def cycle_columns(self) -> list[int]:
        """Cycle vertices in arc order, deepest first, center last."""
        order = self.graph.cycle_order(self.root)
        return order + [self.root]


def _tags(
    t: BooleanExpression, positions: tuple[int, ...]
) -> dict[int, tuple[int, str | None]]:
    """Per letter: occurrence count and, for single occurrences, the side."""
    out: dict[int, tuple[int, str | None]] = {}
    for p in positions:
        s = t.word[p]
        count, _ = out.get(s, (0, None))
        out[s] = (count + 1, t.side_of(p))
    return {s: (c, (side if c == 1 else None)) for s, (c, side) in out.items()}


def build_diagram(
    engine: WordEngine, pair: CanonicalPair, J: frozenset[int] = frozenset()
) -> Diagram:
    """The two-row diagram of the canonical pair, with 1R upgrades."""
    t = pair.t
    g = t.graph
    parent = g.parent_map(t.root)
    vtags = _tags(t, pair.v_positions)
    utags = _tags(t, pair.u_positions)

    def entry(tags, s) -> str:
        count, side = tags.get(s, (0, None))
        if count == 0:
            return "0"
        if count == 2:
            return "2"
        return "1" + side

    columns = {}
    for s in range(1, g.n + 1):
        top = entry(vtags, s)
        bot = entry(utags, s)
        columns[s] = Column(s, top, bot, s in J)
    # capitalize 1r when the bottom of the column to the right is nonzero
    for s, col in list(columns.items()):
        par = parent[s]
        if col.top == "1r" and par is not None and columns[par].bot != "0":
            columns[s] = Column(s, "1R", col.bot, col.in_J)
    return Diagram(g, t.root, columns, parent, g.mode == "cycle")


def render_diagram(diagram: Diagram) -> str:
    """Stable text rendering: one line per column in DFS order."""
    g = diagram.graph
    if diagram.is_cycle:
        order = diagram.cycle_columns()
    else:
        order = []
        stack = [diagram.root]
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(diagram.children(v), reverse=True):
                stack.append(w)
    lines = []
    for v in order:
        col = diagram.columns[v]
        par = diagram.parent[v]
        par_s = f"s{par}" if par is not None else "-"
        lines.append(f"s{v} [{col.mark}] top={col.top} bottom={col.bot} parent={par_s}")
    return "\n".join(lines)
