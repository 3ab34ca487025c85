"""Intersection homology Poincare polynomials of boolean elements.

F_v(q) sums q^l(u) P_{u,v}(q) over the lower Bruhat interval of v.  The
printed definition carries q^l(v) instead, which contradicts the stated
value F_{s_1} = 1 + q; the exponent l(u) reproduces every printed value
and is what this module computes.

The closed route factors over the essential components of the diagram
of v (drop zero cells, keep only edges whose lower vertex is doubled).
A component that stays a chain contributes (1+q+q^2) times a power of
(1+q); the one component engaging a branch vertex w with at least two
doubled children contributes q(1+q)^(h+1) + f_(h+1), with h the number
of doubled neighbors of w.  Graphs with two or more branch vertices
have no closed form here and fall back to the definitional sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolean import Diagram
from .catalan import f_poly
from .compute import BoolKL
from .polynomials import Poly
from .words import Word

ONE_PLUS_Q = Poly((1, 1))
CHAIN_FACTOR = Poly((1, 1, 1))


class UnsupportedGraphShape(ValueError):
    """More than one branch vertex: no closed Poincare formula."""


class NotLeftmost(ValueError):
    pass


def poincare_def(ctx: BoolKL, v: Word) -> Poly:
    """Definitional sum over the lower interval, ordinary polynomials."""
    v = ctx.engine.reduce(v)
    out = Poly.zero()
    for u in ctx.engine.subword_elements(v):
        out = out + ctx.kl_oracle(frozenset(), u, v).shift(len(u))
    return out


@dataclass(frozen=True)
class EssentialDecomposition:
    """Connected pieces of the diagram of v after the essential pruning."""

    components: tuple[tuple[int, ...], ...]  # vertex sets, each sorted
    words: tuple[Word, ...]  # the boolean reflections v_i as subwords of v-bar


def essential_components(diagram: Diagram, vbar: Word) -> EssentialDecomposition:
    """Split the diagram of (e, v): zero cells go, edges live below a 2."""
    live = {x for x, c in diagram.columns.items() if c.top != "0"}
    adj: dict[int, set[int]] = {x: set() for x in live}
    for x in live:
        p = diagram.parent[x]
        if p in live and diagram.columns[x].top == "2":
            adj[x].add(p)
            adj[p].add(x)
    comps = []
    seen: set[int] = set()
    for x in sorted(live):
        if x in seen:
            continue
        comp = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z not in comp:
                    comp.add(z)
                    stack.append(z)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    words = tuple(tuple(s for s in vbar if s in comp) for comp in comps)
    return EssentialDecomposition(tuple(comps), words)


def _branch_vertex(ctx: BoolKL) -> int | None:
    branches = ctx.graph.branch_vertices()
    if len(branches) > 1:
        raise UnsupportedGraphShape(
            f"{len(branches)} branch vertices; the closed formula needs at most one"
        )
    return branches[0] if branches else None


def poincare_closed(ctx: BoolKL, v: Word, root: int | None = None) -> Poly:
    """Closed form for trees with at most one branch vertex."""
    E = ctx.engine
    v = E.reduce(v)
    if not v:
        return Poly.one()
    w = _branch_vertex(ctx)
    r = ctx.roots_for(v)[0] if root is None else root
    diagram = ctx.diagram((), v, r)
    decomp = essential_components(diagram, ctx.pair((), v, r).vbar)
    k = sum(1 for comp in decomp.components if len(comp) >= 2)
    l = len(v)
    if w is not None and diagram.columns[w].top == "2":
        par = ctx.graph.parent_map(r)
        kids2 = sum(
            1
            for y in ctx.graph.neighbors(w)
            if par[y] == w and diagram.columns[y].top == "2"
        )
        h = sum(1 for y in ctx.graph.neighbors(w) if diagram.columns[y].top == "2")
        if kids2 >= 2:
            exponent = l - 2 * k - h
            if exponent < 0:
                raise UnsupportedGraphShape(
                    f"degenerate exponent {exponent} at the branch vertex"
                )
            middle = Poly((0, 1)) * ONE_PLUS_Q ** (h + 1) + f_poly(h + 1)
            return CHAIN_FACTOR ** (k - 1) * middle * ONE_PLUS_Q ** exponent
    return CHAIN_FACTOR ** k * ONE_PLUS_Q ** (l - 2 * k)


def poincare_a(ctx: BoolKL, v: Word, root: int | None = None) -> Poly:
    """Type A closed form: (1+q)^(l-2a) (1+q+q^2)^a, a = #(2,1) patterns."""
    E = ctx.engine
    v = E.reduce(v)
    if not v:
        return Poly.one()
    r = ctx.roots_for(v)[0] if root is None else root
    diagram = ctx.diagram((), v, r)
    a = 0
    for x, col in diagram.columns.items():
        p = diagram.parent[x]
        if (
            col.top == "2"
            and p is not None
            and diagram.columns[p].top in ("1l", "1r", "1R")
        ):
            a += 1
    return ONE_PLUS_Q ** (len(v) - 2 * a) * CHAIN_FACTOR ** a


def poincare_split(ctx: BoolKL, v: Word, s: int) -> tuple[Poly, Poly]:
    """(F_{v, s nonzero}, F_{v, s zero}): the definitional sum split by
    whether u uses the letter s.  s must be a leftmost vertex of the
    diagram of v (in the support, with no support below it)."""
    E = ctx.engine
    v = E.reduce(v)
    support = set(v)
    if s not in support:
        raise NotLeftmost(f"{s} is not in the support of {v}")
    for r in ctx.roots_for(v):
        par = ctx.graph.parent_map(r)
        if not any(p == s and y in support for y, p in par.items()):
            break
    else:
        raise NotLeftmost(f"{s} is not a leftmost vertex of the diagram of {v}")
    nonzero = Poly.zero()
    zero = Poly.zero()
    for u in E.subword_elements(v):
        term = ctx.kl_oracle(frozenset(), u, v).shift(len(u))
        if s in set(u):
            nonzero = nonzero + term
        else:
            zero = zero + term
    return nonzero, zero
