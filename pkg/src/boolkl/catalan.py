"""Catalan triangle and the row polynomials f_h(q).

The triangle is built like Pascal's, except no entry may appear to the
left of the first column (OEIS A008313).  Row h has floor(h/2)+1 entries;
in the staggered layout the entries of row h sit at positions
h mod 2, h mod 2 + 2, ..., h, and each entry is the sum of the two
entries diagonally above it.  The first column of the even rows holds the
classical Catalan numbers 1, 1, 2, 5, 14, 42, ...

The row polynomial is

    f_h(q) = sum_{i=0..floor(h/2)} C(h, i) * q^(floor(h/2) - i)

so the leftmost triangle entry carries the highest power.  mu(f_h) is the
coefficient of q^(h/2): the first-column entry for even h, and 0 for odd h.
"""

from __future__ import annotations

from functools import lru_cache

from .polynomials import Poly


@lru_cache(maxsize=None)
def triangle_row(h: int) -> tuple[int, ...]:
    """Entries C(h, 0), C(h, 1), ..., C(h, floor(h/2)) of row h."""
    if h < 0:
        raise ValueError("row index must be >= 0")
    if h == 0:
        return (1,)
    prev = triangle_row(h - 1)

    def above(pos: int) -> int:
        # entry of row h-1 at staggered position pos, 0 when absent
        if pos < 0 or pos > h - 1 or (pos - (h - 1)) % 2 != 0:
            return 0
        return prev[(pos - ((h - 1) % 2)) // 2]

    row = []
    for i in range(h // 2 + 1):
        pos = (h % 2) + 2 * i
        row.append(above(pos - 1) + above(pos + 1))
    return tuple(row)


def catalan_number(k: int) -> int:
    """The k-th Catalan number, read off the first column of row 2k."""
    return triangle_row(2 * k)[0]


@lru_cache(maxsize=None)
def f_poly(h: int) -> Poly:
    """f_h(q); f_0 = 1 by convention (the apex row)."""
    row = triangle_row(h)
    half = h // 2
    coeffs = [0] * (half + 1)
    for i, c in enumerate(row):
        coeffs[half - i] = c
    return Poly(coeffs)


def mu_f(h: int) -> int:
    """Coefficient of q^(h/2) in f_h; zero for odd h."""
    if h % 2 == 1:
        return 0
    return f_poly(h).coeff(h // 2)


def f_poly_by_recurrence(h: int) -> Poly:
    """f_h via f_{h+1} = f_h*(1+q) - mu(f_h)*q^(h/2+1); cross-check path.

    Self-contained: the mu in the step is read off the polynomial built so
    far, not off the triangle, so this is an independent route to f_h.
    """
    p = Poly.one()
    for k in range(h):
        mu_k = p.coeff(k // 2) if k % 2 == 0 else 0
        p = p * Poly((1, 1)) - Poly.monomial(mu_k, k // 2 + 1)
    return p
