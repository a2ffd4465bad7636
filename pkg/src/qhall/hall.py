"""Hall polynomials for filtrations with simple and isotypic semisimple factors.

``top_step(la, i)`` lists the maximal submodules ``N`` of ``M(la)`` with
``M(la)/N = S_i``, grouped by isomorphism class, together with the number of
them as a polynomial in ``q``.  Cutting the top of the ``t``-th summand of
length ``p`` gives ``q^a [[b]]`` submodules, where ``a`` counts summands at
``i`` longer than ``p`` and ``b`` those of length exactly ``p``.
"""

from __future__ import annotations

from collections import defaultdict

from .core import MultiPartition, Word, add_part, content, dim_vector, remove_part, wrap
from .module_theory import dual_vertex, reverse_dual
from .monoid import tight_form, wp
from .poly import Poly


def gauss(m: int) -> Poly:
    """``[[m]] = 1 + q + ... + q^(m-1)``."""
    if m < 0:
        raise ValueError("gauss(m) needs m >= 0")
    return Poly((1,) * m)


def gauss_factorial(m: int) -> Poly:
    if m < 0:
        raise ValueError("gauss_factorial(m) needs m >= 0")
    out = Poly.one()
    for k in range(1, m + 1):
        out = out * gauss(k)
    return out


def top_step(la: MultiPartition, i: int) -> list:
    """Pairs ``(mu, F^la_{S_i, mu})`` with nonzero coefficient."""
    here = la.dual_at(i)
    nxt = la.dual_at(i + 1)
    out = []
    for p in sorted(set(here), reverse=True):
        a = sum(1 for x in here if x > p)
        b = sum(1 for x in here if x == p)
        mu = la.with_duals({i: remove_part(here, p), i + 1: add_part(nxt, p - 1)})
        out.append((mu, gauss(b).shift(a)))
    return out


def socle_step(la: MultiPartition, i: int) -> list:
    """Pairs ``(mu, F^la_{mu, S_i})``: simple submodules ``S_i`` with quotient ``M(mu)``.

    Obtained from ``top_step`` through vector-space duality.
    """
    n = la.n
    return [(reverse_dual(mu), c) for mu, c in top_step(reverse_dual(la), dual_vertex(wrap(i, n), n))]


def bracket(w: Word, la: MultiPartition) -> Poly:
    """``<w|la>``: number of composition series of ``M(la)`` of type ``w``."""
    if w.n != la.n or content(w) != dim_vector(la):
        return Poly.zero()
    return _bracket_memo(w.letters)(0, la)


def _bracket_memo(letters):
    memo = {}

    def rec(k, mu):
        if k == len(letters):
            return Poly.one()
        key = (k, mu)
        if key not in memo:
            total = Poly.zero()
            for nu, c in top_step(mu, letters[k]):
                sub = rec(k + 1, nu)
                if sub:
                    total = total + c * sub
            memo[key] = total
        return memo[key]

    return rec


def bracket_vector(w: Word, elements=None) -> dict:
    """``{la: <w|la>}`` over ``Pi_{content(w)}``, zero entries omitted."""
    from .core import enumerate_pi

    if elements is None:
        elements = enumerate_pi(content(w))
    rec = _bracket_memo(w.letters)
    out = {}
    for la in elements:
        c = rec(0, la)
        if c:
            out[la] = c
    return out


def isotypic_step(la: MultiPartition, i: int, a: int) -> list:
    """Pairs ``(mu, F^la_{aS_i, mu})``: submodules ``M(mu)`` with quotient ``a S_i``.

    A module whose composition factors are all ``S_i`` is semisimple, so the
    ``a``-fold iterate of ``top_step`` counts each such submodule ``[[a]]!`` times.
    """
    if a < 1:
        raise ValueError("multiplicity must be positive")
    layer = {la: Poly.one()}
    for _ in range(a):
        nxt = defaultdict(Poly.zero)
        for mu, c in layer.items():
            for nu, f in top_step(mu, i):
                nxt[nu] = nxt[nu] + c * f
        layer = nxt
    fact = gauss_factorial(a)
    out = []
    for mu in sorted(layer, key=MultiPartition.sort_key):
        c = layer[mu]
        if c:
            q, r = c.divmod(fact)
            assert r.is_zero(), f"isotypic count {c} not divisible by {fact}"
            out.append((mu, q.integral()))
    return out


def reduced_filtration_count(w: Word, la: MultiPartition) -> Poly:
    """Number of reduced filtrations of ``M(la)`` of type ``w``."""
    if w.n != la.n or content(w) != dim_vector(la):
        return Poly.zero()
    pairs = tight_form(w)
    memo = {}

    def rec(k, mu):
        if k == len(pairs):
            return Poly.one()
        key = (k, mu)
        if key not in memo:
            i, e = pairs[k]
            total = Poly.zero()
            for nu, c in isotypic_step(mu, i, e):
                total = total + c * rec(k + 1, nu)
            memo[key] = total
        return memo[key]

    return rec(0, la)


def diagonal_value(w: Word) -> Poly:
    """``prod_a [[e_a]]!`` over the runs of ``w``."""
    out = Poly.one()
    for _, e in tight_form(w):
        out = out * gauss_factorial(e)
    return out


def bracket_at_image(w: Word) -> Poly:
    return bracket(w, wp(w))
