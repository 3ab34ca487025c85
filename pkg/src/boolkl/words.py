"""The word problem for Coxeter groups, by Tits' theorem.

Two reduced words represent the same element iff they are connected by
braid moves (replace an alternating run (st)^m by (ts)^m, commutations
included as m = 2).  A word is reduced iff no braid-equivalent word has
two equal adjacent letters.  Everything here works by breadth-first
closure over braid moves with memoized canonical forms; exact and
presentation-only, which is all the boolean regime needs (words of
length <= 2n+1).

Element identity throughout the package is the lexicographically least
reduced word of the braid class ("canonical word").
"""

from __future__ import annotations

from .graphs import INFINITY, CoxeterGraph

Word = tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a word-problem query would visit too many words."""


def parse_word(text: str) -> Word:
    """Space-separated generator indices, e.g. '1 2 4 5'; '' or 'e' is empty."""
    text = text.strip()
    if text in ("", "e", "eps", "epsilon"):
        return ()
    return tuple(int(p) for p in text.split())


def render_word(w: Word) -> str:
    return " ".join(str(a) for a in w) if w else "e"


class WordEngine:
    """Per-graph word-problem engine with shared memo tables.

    All methods are pure functions of their inputs; the caches only ever
    hold results that recomputation would reproduce, so concurrent use
    is safe as long as dict reads/writes stay atomic (CPython).
    """

    def __init__(self, graph: CoxeterGraph, budget: int = 10**6):
        self.graph = graph
        self.budget = budget
        self._canon: dict[Word, Word] = {(): ()}
        self._class: dict[Word, tuple[Word, ...]] = {(): ((),)}
        self._reduce: dict[Word, Word] = {(): ()}
        self._leq: dict[tuple[Word, Word], bool] = {}
        # flat m-lookup and precomputed braid replacements for speed
        n = graph.n
        self._m = [[0] * (n + 1) for _ in range(n + 1)]
        self._swap: dict[tuple[int, int], Word] = {}
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                m = graph.m(a, b)
                self._m[a][b] = 10**9 if m == INFINITY else m
                if a != b and m != INFINITY:
                    self._swap[(a, b)] = tuple(b if k % 2 == 0 else a for k in range(m))

    # -- braid closure -------------------------------------------------------

    def _closure(self, w: Word):
        """Braid-closure of w at fixed length.

        Returns ("class", all braid-equivalent words) when w is reduced,
        ("shorter", word) when a cancellation was found, or
        ("known", canonical) when the search hit an already-classified word.
        """
        mtab = self._m
        swap = self._swap
        canon_map = self._canon
        seen = {w}
        frontier = [w]
        budget = self.budget
        while frontier:
            new = []
            for word in frontier:
                L = len(word)
                for i in range(L - 1):
                    a = word[i]
                    b = word[i + 1]
                    if a == b:
                        return "shorter", word[:i] + word[i + 2 :]
                    m = mtab[a][b]
                    if i + m <= L:
                        ok = True
                        for k in range(2, m):
                            if word[i + k] != (a if k % 2 == 0 else b):
                                ok = False
                                break
                        if ok:
                            nb = word[:i] + swap[(a, b)] + word[i + m :]
                            if nb not in seen:
                                hit = canon_map.get(nb)
                                if hit is not None:
                                    return "known", hit
                                seen.add(nb)
                                if len(seen) > budget:
                                    raise SearchBudgetExceeded(
                                        f"braid closure of {w} exceeded {budget} words"
                                    )
                                new.append(nb)
            frontier = new
        return "class", tuple(seen)

    # -- reduction and identity ---------------------------------------------

    def reduce(self, w: Word) -> Word:
        """Canonical reduced word of the element of w."""
        cached = self._reduce.get(w)
        if cached is not None:
            return cached
        cur = w
        while True:
            hit = self._canon.get(cur)
            if hit is not None:
                self._reduce[w] = hit
                return hit
            kind, out = self._closure(cur)
            if kind == "known":
                self._reduce[w] = out
                return out
            if kind == "class":
                canon = min(out)
                for member in out:
                    self._canon[member] = canon
                self._class[canon] = out
                self._reduce[w] = canon
                return canon
            cur = out

    def canonical(self, w: Word) -> Word:
        return self.reduce(w)

    def braid_class(self, w: Word) -> tuple[Word, ...]:
        canon = self.reduce(w)
        return self._class[canon]

    def is_reduced(self, w: Word) -> bool:
        return len(self.reduce(w)) == len(w)

    def words_equal(self, w1: Word, w2: Word) -> bool:
        return self.reduce(w1) == self.reduce(w2)

    def length(self, w: Word) -> int:
        return len(self.reduce(w))

    def mult(self, a: Word, b: Word) -> Word:
        """Canonical word of the product; appends letter by letter."""
        out = self.reduce(a)
        for s in b:
            out = self.mult_gen(out, s)
        return out

    def mult_gen(self, w: Word, s: int) -> Word:
        """Canonical word of w*s for a single generator s."""
        return self.reduce(w + (s,))

    def inverse(self, w: Word) -> Word:
        return self.reduce(tuple(reversed(self.reduce(w))))

    # -- descents, quotients, Bruhat order -----------------------------------

    def right_descents(self, w: Word) -> frozenset[int]:
        """D_R(w): the last letters over the braid class."""
        return frozenset(word[-1] for word in self.braid_class(w) if word)

    def left_descents(self, w: Word) -> frozenset[int]:
        return frozenset(word[0] for word in self.braid_class(w) if word)

    def descents(self, w: Word, side: str) -> frozenset[int]:
        if side == "right":
            return self.right_descents(w)
        if side == "left":
            return self.left_descents(w)
        raise ValueError("side must be 'left' or 'right'")

    def in_quotient(self, J: frozenset[int], u: Word) -> bool:
        """u in W^J, i.e. no left descent of u lies in J."""
        return not (self.left_descents(u) & J)

    def _strip_left(self, w: Word, s: int) -> Word:
        """Canonical word of s*w given s in D_L(w)."""
        for word in self.braid_class(w):
            if word and word[0] == s:
                return self.reduce(word[1:])
        raise ValueError(f"{s} is not a left descent of {w}")

    def bruhat_leq(self, u: Word, v: Word) -> bool:
        """Bruhat order via the lifting property.

        For s in D_L(v):  u <= v  iff  (s u <= s v when s in D_L(u),
        else u <= s v).  Recursion grounded at u = e.
        """
        u = self.reduce(u)
        v = self.reduce(v)
        if not u:
            return True
        if len(u) > len(v):
            return False
        if u == v:
            return True
        key = (u, v)
        hit = self._leq.get(key)
        if hit is not None:
            return hit
        s = min(self.left_descents(v))
        sv = self._strip_left(v, s)
        if s in self.left_descents(u):
            out = self.bruhat_leq(self._strip_left(u, s), sv)
        else:
            out = self.bruhat_leq(u, sv)
        self._leq[key] = out
        return out

    # -- lower Bruhat intervals ----------------------------------------------

    def subword_elements(self, w: Word) -> frozenset[Word]:
        """All elements of subwords of w: the lower interval [e, w].

        Scans w left to right, keeping the canonical words of every element
        reachable as a subword so far.
        """
        current: set[Word] = {()}
        for s in w:
            current |= {self.mult_gen(x, s) for x in current}
        return frozenset(current)
