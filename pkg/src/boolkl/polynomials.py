"""Exact univariate polynomials in q with integer coefficients.

A polynomial is a tuple of coefficients, index k holding the coefficient
of q^k, with no trailing zeros.  The zero polynomial is the empty tuple.
All Kazhdan-Lusztig computations in this package run over these; nothing
is ever floated.
"""

from __future__ import annotations

from typing import Iterable


class Poly:
    """Immutable integer polynomial in the indeterminate q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def q() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def monomial(coeff: int, power: int) -> "Poly":
        if coeff == 0:
            return Poly(())
        return Poly((0,) * power + (coeff,))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def leq_coefficientwise(self, other: "Poly") -> bool:
        """True iff every coefficient of self is <= the one of other."""
        top = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) <= other.coeff(k) for k in range(top))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by q^k."""
        if self.is_zero() or k == 0:
            return self
        return Poly((0,) * k + self.coeffs)

    def scale(self, c: int) -> "Poly":
        return Poly(tuple(c * a for a in self.coeffs))

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs})"

    def __str__(self) -> str:
        return render(self)


def render(p: Poly) -> str:
    """Render in descending powers, e.g. '2q^2+3q+1'.  Zero renders '0'."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)


def parse_poly(text: str) -> Poly:
    """Parse the output of render(); used by tests and the CLI round trip."""
    text = text.strip().replace(" ", "")
    if text in ("0", ""):
        return Poly.zero()
    # normalize leading sign and split into signed terms
    if text[0] not in "+-":
        text = "+" + text
    terms = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    out = Poly.zero()
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term[1:]
        if "q" in body:
            coeff_s, _, pow_s = body.partition("q")
            coeff = int(coeff_s) if coeff_s else 1
            power = int(pow_s[1:]) if pow_s.startswith("^") else 1
        else:
            coeff = int(body)
            power = 0
        out = out + Poly.monomial(sign * coeff, power)
    return out


ZERO = Poly.zero()
ONE = Poly.one()
Q = Poly.q()
ONE_PLUS_Q = Poly((1, 1))
