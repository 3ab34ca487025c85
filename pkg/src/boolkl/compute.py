"""High-level pair computations: both routes to P^J_{u,v} on one graph.

A BoolKL context owns the word engine, the recursion oracle, and the
boolean expressions of a graph, and exposes the closed form next to the
oracle so that callers (CLI, sweeps, tests) can compare them.

Root policy: a tree admits one boolean expression per root; a pair is
computed against the first root whose reflection dominates v (callers
may pin the root instead).  On a cycle, a pair with full support uses
the cyclic formula at the first admissible center; anything smaller
lives inside a path parabolic and is delegated, component by commuting
component, to the tree formula on a relabeled path.
"""

from __future__ import annotations

from .boolean import (
    BooleanExpression,
    CanonicalPair,
    Diagram,
    NotBelow,
    boolean_expression,
    build_diagram,
    canonicalize_pair,
    enumerate_boolean,
)
from .closedform import kl_closed, kl_closed_affine
from .graphs import CoxeterGraph, path_graph
from .oracle import KLOracle, NotBoolean
from .polynomials import ONE, Poly
from .words import Word, WordEngine


class BoolKL:
    def __init__(self, graph: CoxeterGraph, budget: int = 10**6):
        self.graph = graph
        self.engine = WordEngine(graph, budget)
        self.oracle = KLOracle(self.engine)
        self._expr: dict[int, BooleanExpression] = {}
        self._expr_canon: dict[int, Word] = {}
        self._path_ctx: dict[int, "BoolKL"] = {}
        self._pairs: dict[tuple[Word, Word, int], CanonicalPair] = {}
        self._roots: dict[Word, list[int]] = {}

    # -- boolean expressions ----------------------------------------------

    def expression(self, root: int) -> BooleanExpression:
        t = self._expr.get(root)
        if t is None:
            t = boolean_expression(self.graph, root)
            self._expr[root] = t
            self._expr_canon[root] = self.engine.reduce(t.word)
        return t

    def roots_for(self, v: Word) -> list[int]:
        """Roots (or centers) whose boolean reflection dominates v."""
        v = self.engine.reduce(v)
        out = self._roots.get(v)
        if out is None:
            out = []
            for r in range(1, self.graph.n + 1):
                self.expression(r)
                if self.engine.bruhat_leq(v, self._expr_canon[r]):
                    out.append(r)
            self._roots[v] = out
        return out

    def boolean_elements(self, root: int, J: frozenset[int] = frozenset()) -> list[Word]:
        return enumerate_boolean(self.engine, self.expression(root), J)

    # -- diagrams ------------------------------------------------------------

    def pair(self, u: Word, v: Word, root: int) -> CanonicalPair:
        key = (u, v, root)
        hit = self._pairs.get(key)
        if hit is None:
            hit = canonicalize_pair(self.engine, self.expression(root), v, u)
            self._pairs[key] = hit
        return hit

    def diagram(self, u: Word, v: Word, root: int, J: frozenset[int] = frozenset()) -> Diagram:
        return build_diagram(self.engine, self.pair(u, v, root), J)

    # -- the closed form -------------------------------------------------------

    def kl_closed(self, J: frozenset[int], u: Word, v: Word, root: int | None = None) -> Poly:
        E = self.engine
        u = E.reduce(u)
        v = E.reduce(v)
        J = frozenset(J)
        if not E.bruhat_leq(u, v):
            return Poly.zero()
        if u == v:
            return ONE
        if self.graph.mode == "cycle":
            return self._closed_cycle(J, u, v, root)
        return self._closed_tree(J, u, v, root)

    def _pick_root(self, v: Word, root: int | None) -> int:
        if root is not None:
            self.expression(root)
            if not self.engine.bruhat_leq(v, self._expr_canon[root]):
                raise NotBoolean(f"v = {v} is not below the reflection rooted at {root}")
            return root
        roots = self.roots_for(v)
        if not roots:
            raise NotBoolean(f"v = {v} is not a boolean element of this graph")
        return roots[0]

    def _closed_tree(self, J: frozenset[int], u: Word, v: Word, root: int | None) -> Poly:
        r = self._pick_root(v, root)
        return kl_closed(self.diagram(u, v, r, J))

    def _closed_cycle(self, J: frozenset[int], u: Word, v: Word, center: int | None) -> Poly:
        support = set(v)
        r = self._pick_root(v, center)
        if r in support:
            # a live center: the wrap geometry persists, use the cyclic counts
            return kl_closed_affine(self.diagram(u, v, r, J))
        # dead center: commuting path components, each a tree problem
        out = ONE
        for comp in self._support_components(support):
            relabel = {x: i + 1 for i, x in enumerate(comp)}
            ctx = self._path_context(len(comp))
            u_i = tuple(relabel[x] for x in u if x in relabel)
            v_i = tuple(relabel[x] for x in v if x in relabel)
            J_i = frozenset(relabel[x] for x in J if x in relabel)
            out = out * ctx.kl_closed(J_i, u_i, v_i)
        return out

    def _support_components(self, support: set[int]) -> list[list[int]]:
        """Connected components of the support, each in path order."""
        comps = []
        left = set(support)
        while left:
            start = min(left)
            comp = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for y in self.graph.neighbors(x):
                    if y in left and y not in comp:
                        comp.add(y)
                        frontier.append(y)
            left -= comp
            ends = [x for x in comp if sum(1 for y in self.graph.neighbors(x) if y in comp) <= 1]
            walk = [min(ends)] if ends else [min(comp)]
            while len(walk) < len(comp):
                nxt = [y for y in self.graph.neighbors(walk[-1]) if y in comp and y not in walk]
                walk.append(nxt[0])
            comps.append(walk)
        return comps

    def _path_context(self, k: int) -> "BoolKL":
        ctx = self._path_ctx.get(k)
        if ctx is None:
            ctx = BoolKL(path_graph(k))
            self._path_ctx[k] = ctx
        return ctx

    # -- oracle passthroughs -----------------------------------------------------

    def kl_oracle(self, J: frozenset[int], u: Word, v: Word) -> Poly:
        return self.oracle.kl_parabolic(frozenset(J), u, v)

    def mu_oracle(self, J: frozenset[int], u: Word, v: Word) -> int:
        return self.oracle.mu(frozenset(J), u, v)

    def mu_closed(self, J: frozenset[int], u: Word, v: Word, root: int | None = None) -> int:
        E = self.engine
        u, v = E.reduce(u), E.reduce(v)
        gap = len(v) - len(u)
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.kl_closed(J, u, v, root).coeff((gap - 1) // 2)
