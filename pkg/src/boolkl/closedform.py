"""Closed product formulas for boolean Kazhdan-Lusztig polynomials.

The diagram of a canonical pair determines P^J_{u,v} directly.  Zero
columns split the diagram into independent components (commuting
supports), and inside a component every column is classified by its
entry pair, its mark, and its nonzero children:

* a "2-child" of a column is a child with top 2 and bottom 0 or 1l;
  these are the columns that feed Catalan factors into their parent.
* a "flipper" child carries equal entries (1l,1l) or (2,2); peeling it
  removes its letter from both rows and drops the parent from J, so a
  flipper converts a J-marked parent into an unmarked one.
* the remaining pair types (1l,0), (1r,0), (1r,1r), (2,1r) and the
  capitalized (1R,0), (1R,1r), (2,0) peel away without touching their
  parent; they are the prefix sets P1 and P2 of the pattern summands.

A column X with bottom 0 and k 2-children contributes

    top 1l/1r/1R      -> factor f_k     (a-counts, h = k-1)
    top 2             -> factor f_{k+1} (a-counts, h = k)

except that a J-marked X with no flipper child contributes f - 1
instead (b-counts) when its top is 2, 1l or 1r; the capital 1R keeps
the full factor.  Factors f_1 - 1 = 0 are the vanishing conditions and
are booked as the c-counts; the remaining vanishing shapes (c', c'')
live on columns with nonzero bottom.  The polynomial is

    P^J_{u,v} = prod_{h>=1} f_{h+1}^{a_h} (f_{h+1}-1)^{b_h},   or
    0 when c + c' + c'' > 0.

For the affine cycles the counts a, b, c''' follow the cyclic pattern
summands; the cut column (the one farthest from the center along the
arc) interacts with both of its graph neighbors, which is what the
c''' shapes encode.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .boolean import Diagram
from .catalan import f_poly
from .polynomials import ONE, ZERO, Poly

P1 = {("1l", "0"), ("1r", "0"), ("1r", "1r"), ("2", "1r")}
P2 = {("1R", "0"), ("1R", "1r"), ("2", "0")}
TOP_ONES = ("1l", "1r", "1R")


class NotTreeDiagram(ValueError):
    pass


class NotCycleDiagram(ValueError):
    pass


class DiagramInvariantError(AssertionError):
    """A column/child combination the canonical construction cannot produce."""


@dataclass
class PatternCounts:
    """Exact subdiagram-occurrence counts read off a pair diagram."""

    a: dict[int, int] = field(default_factory=dict)
    b: dict[int, int] = field(default_factory=dict)
    parts: dict[str, int] = field(default_factory=dict)
    affine: bool = False

    def bump(self, name: str, amount: int = 1):
        self.parts[name] = self.parts.get(name, 0) + amount

    def bump_a(self, h: int, name: str):
        self.a[h] = self.a.get(h, 0) + 1
        self.bump(name)

    def bump_b(self, h: int, name: str):
        self.b[h] = self.b.get(h, 0) + 1
        self.bump(name)

    def part(self, name: str) -> int:
        return self.parts.get(name, 0)

    @property
    def c(self) -> int:
        return sum(self.part(k) for k in ("c1", "c2", "c3", "c4", "c5"))

    @property
    def cp(self) -> int:
        return sum(self.part(k) for k in ("cp1", "cp2"))

    @property
    def cpp(self) -> int:
        return self.part("cpp1")

    @property
    def cppp(self) -> int:
        return sum(self.part(k) for k in ("cppp1", "cppp2", "cppp3"))

    @property
    def cbar(self) -> int:
        if self.affine:
            return self.c + self.cp + self.cpp + self.cppp
        return self.c + self.cp + self.cpp

    @property
    def a_aff(self) -> int:
        return sum(self.part(k) for k in ("aff_a1", "aff_a2"))

    @property
    def b_aff(self) -> int:
        return sum(self.part(k) for k in ("aff_b1", "aff_b2", "aff_b3"))


def _entry(col) -> tuple[str, str]:
    return (col.top, col.bot)


def _is_2child(col) -> bool:
    return col.top == "2" and col.bot in ("0", "1l")


def _is_flipper(col) -> bool:
    return (col.top, col.bot) in (("1l", "1l"), ("2", "2"))


class _TreeCounter:
    """Evaluates the tree pattern summands column by column."""

    def __init__(self, diagram: Diagram, counts: PatternCounts, strict: bool = True):
        self.d = diagram
        self.counts = counts
        self.strict = strict
        # children among nonzero columns only; zero columns split components
        self.children: dict[int, list] = {
            v: [] for v, col in diagram.columns.items() if col.top != "0"
        }
        for v, col in diagram.columns.items():
            if col.top == "0":
                continue
            p = diagram.parent[v]
            if p is not None and diagram.columns[p].top != "0":
                self.children[p].append(diagram.columns[v])

    def run(self):
        for v, col in self.d.columns.items():
            if col.top != "0":
                self.column(v, col)

    def column(self, v: int, col):
        kids = self.children[v]
        k2 = sum(1 for c in kids if _is_2child(c))
        flip = any(_is_flipper(c) for c in kids)
        counts = self.counts
        if col.bot == "0":
            if self.strict:
                for c in kids:
                    if c.top in ("1R", "2") and not (_is_2child(c) or _entry(c) in P1):
                        raise DiagramInvariantError(
                            f"impossible child {c} under bottom-0 {col}"
                        )
            if col.top in TOP_ONES:
                if not col.in_J or flip:
                    if k2 >= 1:
                        counts.bump_a(k2 - 1, "a1" if not col.in_J else "a3")
                elif col.top == "1R":
                    if k2 >= 1:
                        counts.bump_a(k2 - 1, "a5")
                else:  # marked, no flipper, lowercase side
                    if k2 >= 1:
                        counts.bump_b(k2 - 1, "b1")
                    if k2 == 1:
                        counts.bump("c3" if col.top == "1r" else "c5")
                    elif k2 == 0:
                        if col.top == "1r":
                            counts.bump("c4")
                        elif any(_entry(c) == ("1l", "0") for c in kids):
                            counts.bump("c2")
            elif col.top == "2":
                if not col.in_J or flip:
                    counts.bump_a(k2, "a2" if not col.in_J else "a4")
                else:
                    counts.bump_b(k2, "b2")
                    if k2 == 0:
                        counts.bump("c1")
        else:
            if col.in_J and not flip:
                par = self.d.parent[v]
                par_bot = "0" if par is None else self.d.columns[par].bot
                supported = [c for c in kids if c.bot != "0"]
                if _entry(col) == ("2", "1r") and not any(
                    _entry(c) == ("2", "1l") for c in kids
                ):
                    counts.bump("cp1")
                # the braid veto: a lone (2,1l) child over an m=3 edge can
                # push the marked letter to the front of u*s.  Blockers are
                # other children carrying left-side occurrences of u, and,
                # when the marked occurrence itself sits on the right, the
                # parent occurrence as well.
                left_kids = [c for c in kids if c.bot == "1l"]
                braid_veto = (
                    col.bot in ("1l", "1r")
                    and len(left_kids) == 1
                    and _entry(left_kids[0]) == ("2", "1l")
                    and self.d.graph.m(left_kids[0].letter, v) == 3
                    and (col.bot == "1l" or par_bot == "0")
                )
                if braid_veto:
                    if _entry(col) == ("1l", "1l"):
                        counts.bump("cp2")
                    else:
                        counts.bump("cpp1")


def count_patterns(diagram: Diagram) -> PatternCounts:
    """Pattern counts of a tree diagram (the five a, two b, 5+2+1 c shapes)."""
    counts = PatternCounts()
    _TreeCounter(diagram, counts).run()
    if counts.b.get(0, 0) != counts.part("c1") + counts.part("c3") + counts.part("c5"):
        raise DiagramInvariantError(
            f"b_0 = {counts.b.get(0, 0)} does not coincide with its vanishing shapes"
        )
    return counts


def kl_closed_from_counts(counts: PatternCounts) -> Poly:
    if counts.cbar > 0:
        return ZERO
    out = ONE
    for h, mult in counts.a.items():
        if h >= 1:
            out = out * f_poly(h + 1) ** mult
    for h, mult in counts.b.items():
        if h >= 1:
            out = out * (f_poly(h + 1) - ONE) ** mult
    return out


def kl_closed(diagram: Diagram) -> Poly:
    """The tree product formula evaluated on a pair diagram."""
    if diagram.is_cycle:
        raise NotTreeDiagram("cycle diagram passed to the tree formula")
    return kl_closed_from_counts(count_patterns(diagram))


def mu_closed(diagram: Diagram) -> int:
    """Top-degree coefficient of the closed form: the mu coefficient.

    Nonzero only when exactly one Catalan factor survives at full degree,
    in which case the value is a Catalan number.
    """
    gap = 0
    for col in diagram.columns.values():
        gap += {"0": 0, "2": 2}.get(col.top, 1)
        gap -= {"0": 0, "2": 2}.get(col.bot, 1)
    if gap <= 0 or gap % 2 == 0:
        return 0
    p = kl_closed(diagram)
    return p.coeff((gap - 1) // 2)


# -- affine cycles -------------------------------------------------------------


_AFF_TRANSPARENT = {("1R", "0"), ("1R", "1r"), ("1r", "1r"), ("2", "1r")}


_ZERO_ENTRY = ("0", "0")


def count_patterns_affine(diagram: Diagram) -> PatternCounts:
    """Counts for a cyclic diagram whose center column is nonzero.

    The arc behaves like a path with the cut column (the one farthest
    from the center) as its deepest leaf, except that the cut is also a
    graph neighbor of the center.  A cut with top 2 whose two neighbor
    bottoms vanish is "active": it feeds one Catalan factor to the first
    non-transparent column up the arc, marked q when that consumer or
    the center carries a mark.  Inactive cuts dissolve into prefix
    material: a (2,0) leaves a (1l,0), a (2,1l) turns braid witness for
    its marked neighbors, a (2,2) or (1l,1l) unmarks both neighbors.
    When the arc next to the cut is dead the cut hangs off the center
    alone and ordinary tree cap rules apply there.  Vanishing shapes are
    the tree ones on the arc plus the wrap interactions (the c-triple-
    prime family).
    """
    if not diagram.is_cycle:
        raise NotCycleDiagram("tree diagram passed to the cyclic counter")
    order = diagram.cycle_columns()
    cols = [diagram.columns[v] for v in order]
    counts = PatternCounts(affine=True)

    W, Z = cols[:-1], cols[-1]
    cut, wn = W[0], W[-1]
    w2 = W[1] if len(W) > 1 else Z
    if Z.top == "0":
        raise NotCycleDiagram("cyclic counts need a live center column")

    arc_dead = len(W) == 1 or W[1].top == "0"
    cut_live = cut.top != "0"
    active = (
        not arc_dead
        and _entry(cut) in (("2", "0"), ("2", "1l"))
        and w2.bot == "0"
        and Z.bot == "0"
    )
    kc = None
    if active:
        kc = 1
        while kc < len(W) and W[kc].top != "0" and (
            _entry(W[kc]) in _AFF_TRANSPARENT
            and not (W[kc].in_J and W[kc].top != "1R")
        ):
            kc += 1
        if kc < len(W) and W[kc].top == "0":
            kc = None
            active = False  # the walk fell into a gap: nothing consumes the cut
    cut_braid = (not active) and (not arc_dead) and _entry(cut) == ("2", "1l")
    cut_flipper = _is_flipper(cut) or cut_braid
    cut_residue_1l0 = _entry(cut) in (("1l", "0"), ("2", "1r")) or (
        (not active) and (not arc_dead) and _entry(cut) == ("2", "0")
    )

    for k in range(1, len(W)):
        X = W[k]
        if X.top == "0":
            continue
        gap = k >= 2 and W[k - 1].top == "0"
        child = W[k - 1]
        child_entry = _ZERO_ENTRY if gap else _entry(child)
        child_is2 = (not gap) and k >= 2 and _is_2child(child)
        child_flips = ((not gap) and _is_flipper(child)) if k >= 2 else cut_flipper
        child_res_1l0 = (
            child_entry in (("1l", "0"), ("2", "1r")) if k >= 2 else cut_residue_1l0
        )
        child_braid = child_entry == ("2", "1l") if k >= 2 else cut_braid
        k2 = 1 if child_is2 else 0
        marked = X.in_J and not child_flips
        if kc == k == 1:
            continue  # the adjacent consumer of the active cut, booked below
        if X.bot == "0":
            if X.top == "2":
                if marked:
                    if k2 == 1:
                        counts.bump_b(1, "aff_b1")
                    else:
                        counts.bump("c1")
                elif k2 == 1:
                    counts.bump_a(1, "aff_a1")
            elif X.top in TOP_ONES:
                if marked and X.top != "1R":
                    if k2 == 1:
                        counts.bump("c3" if X.top == "1r" else "c5")
                    elif X.top == "1r":
                        counts.bump("c4")
                    elif child_res_1l0:
                        counts.bump("c2")
        else:
            flip_guard = ((not gap) and _is_flipper(child)) if k >= 2 else _is_flipper(cut)
            if X.in_J and not flip_guard:
                if X.bot in ("1l", "1r") and child_braid:
                    par_bot = W[k + 1].bot if k + 1 < len(W) else Z.bot
                    ok = X.bot == "1l" or par_bot == "0"
                    if k == 1 and Z.bot != "0":
                        ok = False  # the center occurrence blocks the cut's travel
                    if ok:
                        counts.bump("cpp1")
                if _entry(X) == ("2", "1r") and not child_braid:
                    counts.bump("cp1")

    if arc_dead and cut_live:
        # the cut hangs off the center alone: tree cap rules at the center
        kids = [c for c in ((wn if wn.top != "0" and wn is not cut else None), cut) if c]
        k2z = sum(1 for c in kids if _is_2child(c))
        zfl = any(_is_flipper(c) for c in kids)
        z_marked = Z.in_J and not zfl
        if Z.bot == "0":
            if k2z >= 2:
                if z_marked:
                    counts.bump_b(1, "aff_b2")
                else:
                    counts.bump_a(1, "aff_a2")
            elif z_marked:
                if k2z == 1:
                    counts.bump("c5")
                elif any(_entry(c) in (("1l", "0"), ("2", "1r")) for c in kids):
                    counts.bump("c2")
                elif _entry(cut) == ("2", "0"):
                    counts.bump("cppp3")
        else:
            left = [c for c in kids if c.bot == "1l"]
            if Z.in_J and not zfl and len(left) == 1 and _entry(left[0]) == ("2", "1l"):
                counts.bump("cpp1")
    else:
        z_marked = Z.in_J and not (_is_flipper(wn) or cut_flipper)
        wn_live = wn.top != "0"
        if Z.bot != "0":
            if Z.in_J and Z.bot == "1l":
                if (
                    wn_live
                    and _entry(wn) == ("2", "1l")
                    and cut.bot in ("0", "1r")
                    and not cut_flipper
                ):
                    counts.bump("cppp1")
                if (
                    cut_braid
                    and w2.bot == "0"
                    and (wn is w2 or not wn_live or wn.bot in ("0", "1r"))
                    and not (wn_live and _is_flipper(wn))
                ):
                    counts.bump("cppp2")
        else:
            if z_marked and not active:
                counts.bump("cppp3")  # exposed marked center over a dead arc
        if active:
            if kc < len(W):
                consumer = W[kc]
                cfl = _is_flipper(W[kc - 1]) if kc >= 2 else False
                consumer_marked = consumer.in_J and not cfl and consumer.top != "1R"
                booked_b = consumer_marked or z_marked
            else:
                booked_b = z_marked
            if booked_b:
                counts.bump_b(1, "aff_b2")
            else:
                counts.bump_a(1, "aff_a2")
    if cut.in_J and _entry(cut) == ("1r", "0") and w2.bot == "0" and Z.bot == "0":
        counts.bump("c4")
    return counts


def kl_closed_affine(diagram: Diagram) -> Poly:
    """The cyclic theorem: q^b (1+q)^a, or zero on any vanishing shape."""
    counts = count_patterns_affine(diagram)
    if counts.cbar > 0:
        return ZERO
    return Poly((0, 1)) ** counts.b_aff * Poly((1, 1)) ** counts.a_aff
