"""Ground truth: parabolic (type q) Kazhdan-Lusztig polynomials by recursion.

For u, v in W^J with u <= v and any right descent s of v,

    P^J_{u,v} = Ptilde - Mtilde

    Ptilde = P^J_{us,vs} + q P^J_{u,vs}    if us < u
           = q P^J_{us,vs} + P^J_{u,vs}    if u < us in W^J
           = 0                             if u < us not in W^J

    Mtilde = sum over w in W^J, u <= w < vs, ws < w of
             mu(w, vs) * q^((l(v)-l(w))/2) * P^J_{u,w}

with mu the ordinary mu-coefficient (equal to the parabolic one for
quotient elements).  P^J_{v,v} = 1 and P^J_{u,v} = 0 when u is not below
v.  The recursion stays inside the lower Bruhat interval of v, so for
boolean v everything in sight is boolean.

This module never looks at diagrams; it is the independent side of every
closed-form check in the package.
"""

from __future__ import annotations

from .boolean import BooleanExpression
from .polynomials import ONE, Q, ZERO, Poly
from .words import Word, WordEngine


class NotInQuotient(ValueError):
    pass


class NotBoolean(ValueError):
    pass


class ParabolicSubgroupTooLarge(RuntimeError):
    pass


class KLOracle:
    """Memoized Deodhar recursion over a fixed word engine."""

    def __init__(self, engine: WordEngine, subgroup_cap: int = 10**5):
        self.E = engine
        self.subgroup_cap = subgroup_cap
        self._memo: dict[tuple[Word, Word, frozenset[int]], Poly] = {}
        self._ideal: dict[Word, frozenset[Word]] = {}

    # -- helpers -------------------------------------------------------------

    def _interval_below(self, v: Word) -> frozenset[Word]:
        hit = self._ideal.get(v)
        if hit is None:
            hit = self.E.subword_elements(v)
            self._ideal[v] = hit
        return hit

    def _validate(self, J: frozenset[int], u: Word, v: Word, t: BooleanExpression | None):
        if not self.E.in_quotient(J, u):
            raise NotInQuotient(f"u = {u} has a left descent in J = {set(J)}")
        if not self.E.in_quotient(J, v):
            raise NotInQuotient(f"v = {v} has a left descent in J = {set(J)}")
        if t is not None and not self.E.bruhat_leq(v, t.word):
            raise NotBoolean(f"v = {v} is not below the boolean expression {t.word}")

    # -- the recursion ---------------------------------------------------------

    def kl_parabolic(
        self,
        J: frozenset[int],
        u: Word,
        v: Word,
        t: BooleanExpression | None = None,
    ) -> Poly:
        E = self.E
        u = E.reduce(u)
        v = E.reduce(v)
        J = frozenset(J)
        self._validate(J, u, v, t)
        return self._kl(J, u, v)

    def _kl(self, J: frozenset[int], u: Word, v: Word) -> Poly:
        E = self.E
        if u == v:
            return ONE
        if len(u) >= len(v) or not E.bruhat_leq(u, v):
            return ZERO
        key = (u, v, J)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        s = min(E.right_descents(v))
        vs = E.mult_gen(v, s)
        us = E.mult_gen(u, s)

        mt = ZERO
        for w in self._interval_below(vs):
            if w == vs or (len(v) - len(w)) % 2 != 0:
                continue
            if s not in E.right_descents(w):
                continue
            if not E.in_quotient(J, w):
                continue
            if not E.bruhat_leq(u, w):
                continue
            mu_val = self.mu_ordinary(w, vs)
            if mu_val:
                mt = mt + self._kl(J, u, w).scale(mu_val).shift((len(v) - len(w)) // 2)

        if len(us) < len(u):
            pt = self._kl(J, us, vs) + Q * self._kl(J, u, vs)
        elif E.in_quotient(J, us):
            pt = Q * self._kl(J, us, vs) + self._kl(J, u, vs)
        else:
            pt = ZERO
        out = pt - mt
        self._memo[key] = out
        return out

    # -- derived quantities -----------------------------------------------------

    def kl_ordinary(self, u: Word, v: Word) -> Poly:
        return self.kl_parabolic(frozenset(), u, v)

    def mu_ordinary(self, u: Word, v: Word) -> int:
        gap = len(self.E.reduce(v)) - len(self.E.reduce(u))
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self._kl(frozenset(), self.E.reduce(u), self.E.reduce(v)).coeff((gap - 1) // 2)

    def mu(self, J: frozenset[int], u: Word, v: Word) -> int:
        """Coefficient of q^((l(v)-l(u)-1)/2) in P^J_{u,v}; 0 for even gaps."""
        u = self.E.reduce(u)
        v = self.E.reduce(v)
        gap = len(v) - len(u)
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.kl_parabolic(frozenset(J), u, v).coeff((gap - 1) // 2)

    # -- the alternating-sum cross-check ------------------------------------------

    def parabolic_subgroup(self, J: frozenset[int]) -> list[Word]:
        """All elements of W_J, by closure under the generators of J."""
        E = self.E
        seen = {(): ()}
        frontier = [()]
        while frontier:
            new = []
            for w in frontier:
                for s in J:
                    x = E.mult_gen(w, s)
                    if x not in seen:
                        if len(seen) >= self.subgroup_cap:
                            raise ParabolicSubgroupTooLarge(
                                f"|W_J| exceeds cap {self.subgroup_cap} for J = {set(J)}"
                            )
                        seen[x] = x
                        new.append(x)
            frontier = new
        return sorted(seen, key=lambda w: (len(w), w))

    def parabolic_from_ordinary(self, J: frozenset[int], u: Word, v: Word) -> Poly:
        """P^J_{u,v} as the alternating sum over W_J of ordinary polynomials."""
        E = self.E
        u = E.reduce(u)
        v = E.reduce(v)
        J = frozenset(J)
        self._validate(J, u, v, None)
        out = ZERO
        for w in self.parabolic_subgroup(J):
            term = self._kl(frozenset(), E.mult(w, u), v)
            if len(w) % 2:
                out = out - term
            else:
                out = out + term
        return out
