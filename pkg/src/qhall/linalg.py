"""Linear algebra over Q(v) by fraction-free elimination on polynomial rows."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import Poly, RatFunc, poly_gcd


def _lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def clear_denominators(row) -> list:
    """Scale a row of rational functions to polynomials by the lcm of denominators."""
    den = Poly.one("v")
    row = [RatFunc.coerce(x) for x in row]
    for x in row:
        if not x.is_zero():
            den = _lcm(den, x.den)
    return [x.num * den.exact_div(x.den) if not x.is_zero() else Poly.zero("v") for x in row]


def primitive(row: list) -> list:
    """Divide a polynomial row by the gcd of its entries and its rational content."""
    nz = [x for x in row if not x.is_zero()]
    if not nz:
        return row
    g = nz[0]
    for x in nz[1:]:
        g = poly_gcd(g, x)
        if g.degree == 0:
            break
    if g.degree > 0:
        row = [x.exact_div(g) for x in row]
    cont = None
    for x in row:
        if not x.is_zero():
            cx = x.content()
            cont = cx if cont is None else _frac_gcd(cont, cx)
    return [(x * (1 / cont)).integral() for x in row]


def _frac_gcd(a, b):
    a, b = Fraction(a), Fraction(b)
    return Fraction(gcd(a.numerator * b.denominator, b.numerator * a.denominator), a.denominator * b.denominator)


def echelon(rows, ncols: int | None = None):
    """Reduced row echelon form, kept with polynomial entries.

    Returns ``(reduced_rows, pivot_columns)``; every pivot column is zero
    outside its pivot row.
    """
    M = [primitive(clear_denominators(r)) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        cand = [k for k in range(r, len(M)) if not M[k][c].is_zero()]
        if not cand:
            continue
        k = min(cand, key=lambda k: (M[k][c].degree, sum(x.degree + 1 for x in M[k])))
        M[r], M[k] = M[k], M[r]
        p = M[r][c]
        for k in range(len(M)):
            if k != r and not M[k][c].is_zero():
                f = M[k][c]
                M[k] = primitive([p * x - f * y for x, y in zip(M[k], M[r])])
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, ncols: int | None = None) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{x : rows . x = 0}``, one vector per non-pivot column.

    The vector for free column ``f`` is 1 at ``f`` and 0 at the other free columns.
    """
    if not rows:
        return [[RatFunc(1 if j == f else 0) for j in range(ncols)] for f in range(ncols)]
    R, pivots = echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        x = [RatFunc(0) for _ in range(ncols)]
        x[f] = RatFunc(1)
        for row, p in zip(R, pivots):
            if not row[f].is_zero():
                x[p] = -RatFunc(row[f], row[p])
        out.append(x)
    return out


def solve(rows, rhs) -> list:
    """Unique solution of a square nonsingular system over Q(v)."""
    m = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = echelon(aug, m)
    if pivots != list(range(m)):
        raise ArithmeticError("singular system")
    return [RatFunc(row[m], row[k]) for k, row in enumerate(R)]
