"""Window notation for the classical Weyl groups A_n, B_n, D_n.

A_n permutes [n+1]; B_n consists of signed permutations of [n] with
pi(-i) = -pi(i); D_n is the subgroup with an even number of negative
window entries.  Generator conventions (core index in parentheses):

    A_n: s_i (i)      swaps i, i+1
    B_n: s_0 (1)      negates the first window entry;   m(s_0, s_1) = 4
         s_i (i+1)    swaps positions i, i+1
    D_n: s_0 (1)      maps (pi(1), pi(2)) to (-pi(2), -pi(1))
         s_i (i+1)    swaps positions i, i+1

The boolean recognition, the statistics Exc/Fix/NFix, and the closed
formulas of the classical-group corollaries live here, stated purely in
window arithmetic so they form a route independent of the diagram
engine and of the recursion oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CoxeterGraph, type_a, type_b, type_d
from .polynomials import ONE, Poly
from .words import Word


class InvalidWindow(ValueError):
    pass


class NotBooleanWindow(ValueError):
    pass


class NotComparable(ValueError):
    pass


class WrongVariant(ValueError):
    """The element is not below the requested maximal boolean reflection."""


Window = tuple[int, ...]


@dataclass(frozen=True)
class PermStats:
    """The index sets attached to a boolean (signed) permutation."""

    exc: frozenset[int]
    exc_inv: frozenset[int]
    fix: frozenset[int]
    nfix: frozenset[int]


class Family:
    """One of the classical families, bridging windows and core words."""

    name: str

    def __init__(self, n: int):
        self.n = n

    # -- to be provided per family ------------------------------------

    def graph(self) -> CoxeterGraph:
        raise NotImplementedError

    def identity(self) -> Window:
        raise NotImplementedError

    def validate(self, w: Window):
        raise NotImplementedError

    def apply_right(self, w: Window, core_gen: int) -> Window:
        raise NotImplementedError

    def right_descents(self, w: Window) -> list[int]:
        raise NotImplementedError

    # -- shared machinery ------------------------------------------------

    def from_word(self, word: Word) -> Window:
        w = self.identity()
        for s in word:
            w = self.apply_right(w, s)
        return w

    def to_word(self, w: Window) -> Word:
        """A reduced word for the window, by peeling right descents."""
        self.validate(w)
        out = []
        cur = w
        while True:
            descents = self.right_descents(cur)
            if not descents:
                break
            s = descents[0]
            cur = self.apply_right(cur, s)
            out.append(s)
        if cur != self.identity():
            raise InvalidWindow(f"could not reduce window {w}")
        return tuple(reversed(out))

    def inverse(self, w: Window) -> Window:
        inv = {}
        for i, v in enumerate(w, start=1):
            inv[abs(v)] = i if v > 0 else -i
        return tuple(inv[i] for i in range(1, len(w) + 1))


class TypeA(Family):
    name = "A"

    def graph(self) -> CoxeterGraph:
        return type_a(self.n)

    def identity(self) -> Window:
        return tuple(range(1, self.n + 2))

    def validate(self, w: Window):
        if sorted(w) != list(range(1, self.n + 2)):
            raise InvalidWindow(f"{w} is not a permutation of 1..{self.n + 1}")

    def apply_right(self, w: Window, s: int) -> Window:
        out = list(w)
        out[s - 1], out[s] = out[s], out[s - 1]
        return tuple(out)

    def right_descents(self, w: Window) -> list[int]:
        return [i for i in range(1, self.n + 1) if w[i - 1] > w[i]]


class _Signed(Family):
    def identity(self) -> Window:
        return tuple(range(1, self.n + 1))

    def _validate_signed(self, w: Window):
        if sorted(abs(v) for v in w) != list(range(1, self.n + 1)) or 0 in w:
            raise InvalidWindow(f"{w} is not a signed permutation of 1..{self.n}")

    def apply_right(self, w: Window, s: int) -> Window:
        out = list(w)
        if s == 1:
            self._apply_zero(out)
        else:
            i = s - 1
            out[i - 1], out[i] = out[i], out[i - 1]
        return tuple(out)

    def right_descents(self, w: Window) -> list[int]:
        out = [1] if self._zero_descent(w) else []
        out.extend(i + 1 for i in range(1, self.n) if w[i - 1] > w[i])
        return out


class TypeB(_Signed):
    name = "B"

    def graph(self) -> CoxeterGraph:
        return type_b(self.n)

    def validate(self, w: Window):
        self._validate_signed(w)

    def _apply_zero(self, out: list[int]):
        out[0] = -out[0]

    def _zero_descent(self, w: Window) -> bool:
        return w[0] < 0


class TypeD(_Signed):
    name = "D"

    def graph(self) -> CoxeterGraph:
        return type_d(self.n)

    def validate(self, w: Window):
        self._validate_signed(w)
        if sum(1 for v in w if v < 0) % 2:
            raise InvalidWindow(f"{w} has an odd number of sign changes")

    def _apply_zero(self, out: list[int]):
        out[0], out[1] = -out[1], -out[0]

    def _zero_descent(self, w: Window) -> bool:
        return w[0] + w[1] < 0


def family(name: str, n: int) -> Family:
    return {"A": TypeA, "B": TypeB, "D": TypeD}[name](n)


# -- boolean recognition ----------------------------------------------------


def is_boolean_a(w: Window) -> bool:
    """A_n criterion: every prefix pi([i]) meets [i] in >= i-1 values."""
    n = len(w) - 1
    seen: set[int] = set()
    inside = 0
    for i in range(1, n + 1):
        seen.add(w[i - 1])
        inside += 1 if w[i - 1] <= i else 0
        # values <= i that appeared so far
        count = sum(1 for v in seen if v <= i)
        if count < i - 1:
            return False
    return True


# -- statistics --------------------------------------------------------------


def prefix_fix_set(w: Window) -> frozenset[int]:
    """Fix(pi) = { i : pi([i]) = [i] } over i in [n] (type A windows)."""
    n = len(w) - 1
    out = []
    top = 0
    for i in range(1, n + 1):
        top = max(top, w[i - 1])
        if top == i:
            out.append(i)
    return frozenset(out)


def stats_a(w: Window) -> PermStats:
    n = len(w) - 1
    inv = TypeA(n).inverse(w)
    exc = frozenset(i for i in range(1, n + 1) if inv[i] < i + 1)
    exc_inv = frozenset(i for i in range(1, n + 1) if w[i] < i + 1)
    fix = prefix_fix_set(w)
    nfix = frozenset(
        j for j in range(1, n + 1) if w[j - 1] == j and j not in fix
    )
    return PermStats(exc, exc_inv, fix, nfix)


def suffix_fix_set_b(w: Window) -> frozenset[int]:
    """Fix(pi) = { i in [0, n-1] : pi([i+1, n]) = [i+1, n] } (type B)."""
    n = len(w)
    out = []
    low = n + 1
    for i in range(n - 1, -1, -1):
        low = min(low, w[i])
        if low == i + 1:
            out.append(i)
    return frozenset(out)


def stats_b(w: Window) -> PermStats:
    """Type B statistics; nfix marks the doubled letters of the t1 subword."""
    n = len(w)
    fam = TypeB(n)
    inv = fam.inverse(w)
    fix = suffix_fix_set_b(w)
    nfix = set(i for i in range(1, n) if w[i] == i + 1 and i not in fix)
    if sum(1 for v in w if v < 0) == 2:
        nfix.add(0)
    exc = frozenset(i for i in range(1, n) if 0 < inv[i] < i + 1)
    exc_inv = frozenset(i for i in range(1, n) if 0 < w[i] < i + 1)
    return PermStats(exc, frozenset(exc_inv), fix, frozenset(nfix))


def stats(fam_name: str, w: Window) -> PermStats:
    if fam_name == "A":
        return stats_a(w)
    if fam_name in ("B", "D"):
        return stats_b(w)
    raise ValueError(fam_name)


# -- the type A closed formula ------------------------------------------------

# Occurrence data of the canonical reduced subword, in window arithmetic:
# column i carries the count of s_i (0, 1 or 2) with a side tag for count 1.


def _column_a(w: Window, i: int, fix: frozenset[int]) -> str:
    """Entry of column i: '0', '2', '1l' or '1r'."""
    if i in fix:
        return "0"
    if w[i] == i + 1:
        return "2"
    n = len(w) - 1
    inv = TypeA(n).inverse(w)
    return "1l" if inv[i] < i + 1 else "1r"


def a_columns(pi: Window, rho: Window) -> list[tuple[str, str]]:
    """(top, bottom) entries per column, with the capital R upgrade."""
    n = len(rho) - 1
    fix_r = prefix_fix_set(rho)
    fix_p = prefix_fix_set(pi)
    tops = [_column_a(rho, i, fix_r) for i in range(1, n + 1)]
    bots = [_column_a(pi, i, fix_p) for i in range(1, n + 1)]
    tops[n - 1] = tops[n - 1] if tops[n - 1] in ("0", "2") else "1l"
    bots[n - 1] = bots[n - 1] if bots[n - 1] in ("0", "2") else "1l"
    for i in range(n - 1):
        if tops[i] == "1r" and bots[i + 1] != "0":
            tops[i] = "1R"
    return list(zip(tops, bots))


def kl_a(J: frozenset[int], pi: Window, rho: Window) -> Poly:
    """Parabolic type q polynomial for boolean pi <= rho in A_n.

    The value is q^(marked sites) (1+q)^(free sites) over the factor
    sites A = { i : columns i-1, i both top 2, bottom of i zero }, and
    zero whenever one of the vanishing shapes meets J.
    """
    cols = a_columns(pi, rho)
    n = len(cols)
    is2 = lambda e: e[0] == "2" and e[1] in ("0", "1l")
    isflip = lambda e: e in (("1l", "1l"), ("2", "2"))
    q_power = 0
    one_q_power = 0
    for i in range(n):
        top, bot = cols[i]
        child = cols[i - 1] if i >= 1 else ("0", "0")
        k2 = 1 if is2(child) else 0
        marked = (i + 1) in J and not isflip(child)
        if bot == "0":
            if top == "2":
                if marked:
                    if k2 == 0:
                        return Poly.zero()  # bare marked head
                    q_power += 1
                elif k2 == 1:
                    one_q_power += 1
            elif top in ("1l", "1r"):
                if marked:
                    if k2 == 1:
                        return Poly.zero()  # marked cap over a chain
                    if top == "1r":
                        return Poly.zero()  # marked right-side singleton
                    if child == ("1l", "0"):
                        return Poly.zero()  # exposure of a marked cap
        else:
            if (i + 1) in J and not isflip(child):
                if (top, bot) == ("2", "1r") and child != ("2", "1l"):
                    return Poly.zero()
                if bot in ("1l", "1r") and child == ("2", "1l"):
                    par_bot = cols[i + 1][1] if i + 1 < n else "0"
                    if bot == "1l" or par_bot == "0":
                        return Poly.zero()  # braid veto
    return Poly((0, 1)) ** q_power * Poly((1, 1)) ** one_q_power


def kl_a_ordinary(pi: Window, rho: Window) -> Poly:
    """Ordinary polynomial: (1+q)^(number of factor sites)."""
    return kl_a(frozenset(), pi, rho)


# -- ordinary closed formulas for B_n and D_n ----------------------------------


def kl_b(pi: Window, rho: Window, variant: str) -> Poly:
    """(1+q)^#B with B the site set of the t1 (resp. t2) subword shape.

    Doubled letters of the t1 subword sit at i with rho(i+1) = i+1 off the
    fixed suffix (plus 0 when two entries are negative); for t2 they sit
    at i with rho(i) = i instead.
    """
    n = len(rho)
    fix_p = suffix_fix_set_b(pi)
    fix_r = suffix_fix_set_b(rho)
    if variant == "t1":
        nfix = set(i for i in range(1, n) if rho[i] == i + 1 and i not in fix_r)
        if sum(1 for v in rho if v < 0) == 2:
            nfix.add(0)
        sites = [
            i for i in range(0, n - 1)
            if i in nfix and (i + 1) in nfix and (i + 1) in fix_p
        ]
    elif variant == "t2":
        nfix = set(i for i in range(1, n) if rho[i - 1] == i and i not in fix_r)
        if sum(1 for v in rho if v < 0) == 2:
            nfix.add(0)
        sites = [
            i for i in range(0, n - 1)
            if i in nfix and (i + 1) in nfix and i in fix_p
        ]
    else:
        raise WrongVariant(f"unknown variant {variant!r}")
    return Poly((1, 1)) ** len(sites)


def d_columns(w: Window) -> list[str]:
    """Occurrence entries of the canonical subword of a boolean type D
    element, one per core vertex 1..n (cores 1, 2 are the fork s_0, s_1).

    Entries are '0', '1l', '1r', '2'; sides read off the window as in the
    type A case, with the fork occurrences decided by the sign pattern of
    the first two window entries and their preimages.
    """
    n = len(w)
    fam = TypeD(n)
    inv = fam.inverse(w)
    fixset = suffix_fix_set_b(w)

    def tag(left: bool, right: bool) -> str:
        if left and right:
            return "2"
        if left:
            return "1l"
        if right:
            return "1r"
        return "0"

    s1_right = w[0] >= 3 or w[1] <= -3
    s1_left = inv[0] >= 3 or inv[1] <= -3 or (w[0], w[1]) in ((2, 1), (-1, -2))
    s0_right = w[0] <= -3 or w[1] <= -3
    s0_left = inv[0] <= -3 or inv[1] <= -3 or (w[0], w[1]) in ((-2, -1), (-1, -2))
    cols = [tag(s0_left, s0_right), tag(s1_left, s1_right)]
    for i in range(2, n):
        # core i+1 carries s_i
        if i in fixset:
            cols.append("0")
        elif w[i] == i + 1:
            cols.append("2")
        else:
            cols.append("1l" if abs(inv[i]) < i + 1 else "1r")
    return cols


def kl_d(pi: Window, rho: Window) -> Poly:
    """Ordinary polynomial in type D: the fork-path Catalan product.

    Every top-2 column with bottom 0 contributes f_(k+1) where k counts
    its 2-children; a top-1 cap contributes f_k.  With the fork the only
    factors are f_2 = 1+q and f_3 = 1+2q, giving the stated shape
    (1+q)^D (1+2q)^D'.
    """
    n = len(rho)
    tops = d_columns(rho)
    bots = d_columns(pi)
    out = ONE
    from .catalan import f_poly

    def is2child(j: int) -> bool:
        return tops[j] == "2" and bots[j] in ("0", "1l")

    for i in range(2, n):
        # children of core i+1: the fork cores 1, 2 when i == 2, else core i
        kids = [0, 1] if i == 2 else [i - 1]
        k2 = sum(1 for j in kids if is2child(j))
        if bots[i] != "0":
            continue
        if tops[i] == "2":
            out = out * f_poly(k2 + 1)
        elif tops[i] in ("1l", "1r"):
            out = out * f_poly(k2) if k2 >= 1 else out
    return out


