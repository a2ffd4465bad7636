"""Twisted Hall algebra: monomials ``E_w``, Green's form, its radical and PBW expansions.

Elements of one graded piece are ``HallVector`` objects in the basis
``u_pi``.  Monomials expand with Laurent polynomial coefficients; the
radical of Green's form and anything derived from it live over ``Q(v)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .core import MultiPartition, Word, content, dim_vector, enumerate_pi, unit_vector, wrap
from .hall import bracket_vector, diagonal_value, socle_step, top_step
from .linalg import clear_denominators, echelon, nullspace, primitive, rank
from .module_theory import aut_poly, euler
from .monoid import canonical_word, fiber, is_distinguished, is_separated, wp
from .order import covers_closure
from .poly import LaurentPoly, Poly, RatFunc


@dataclass
class HallVector:
    """Finite sum ``sum c_pi u_pi`` over ``Pi_d``; zero coefficients are dropped."""

    n: int
    d: tuple
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.d = tuple(self.d)
        clean = {}
        for pi, c in self.entries.items():
            if dim_vector(pi) != self.d:
                raise ValueError(f"{pi} does not have dimension vector {self.d}")
            if c:
                clean[pi] = c
        self.entries = clean

    @classmethod
    def basis_vector(cls, pi: MultiPartition, coeff=1) -> "HallVector":
        return cls(pi.n, dim_vector(pi), {pi: RatFunc.coerce(coeff)})

    def coeff(self, pi: MultiPartition):
        return self.entries.get(pi, 0)

    def support(self) -> list:
        return sorted(self.entries, key=MultiPartition.sort_key)

    def to_ratfunc(self) -> "HallVector":
        return HallVector(self.n, self.d, {k: RatFunc.coerce(c) for k, c in self.entries.items()})

    def _check(self, other):
        if self.n != other.n or self.d != other.d:
            raise ValueError("Hall vectors from different graded pieces")

    def __add__(self, other: "HallVector") -> "HallVector":
        self._check(other)
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out[k] + c if k in out else c
        return HallVector(self.n, self.d, out)

    def __neg__(self):
        return HallVector(self.n, self.d, {k: -c for k, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HallVector":
        return HallVector(self.n, self.d, {k: x * c for k, x in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, HallVector):
            return NotImplemented
        a, b = self.to_ratfunc().entries, other.to_ratfunc().entries
        return self.n == other.n and self.d == other.d and a == b

    def is_zero(self) -> bool:
        return not self.entries

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(f"({c})*u{pi}" for pi, c in ((p, self.entries[p]) for p in self.support()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": list(self.d),
            "terms": [{"pi": pi.to_json(), "coeff": self.entries[pi].to_json()} for pi in self.support()],
        }


def epsilon_word(w: Word) -> int:
    """``sum_{r<t} eps(e_{i_r}, e_{i_t})`` for the letters of ``w``."""
    n = w.n
    total = 0
    ls = w.letters
    for r in range(len(ls)):
        for t in range(r + 1, len(ls)):
            if ls[t] == ls[r]:
                total += 1
            if ls[t] == wrap(ls[r] + 1, n):
                total -= 1
    return total


def expand_monomial(w: Word) -> HallVector:
    """``E_w = sum_la v^eps(w) <w|la>(v^2) u_la``."""
    eps = epsilon_word(w)
    vec = bracket_vector(w)
    return HallVector(w.n, content(w), {la: c.in_v().shift(eps) for la, c in vec.items()})


def separated_elements(d) -> list:
    return [pi for pi in enumerate_pi(d) if is_separated(pi)]


@lru_cache(maxsize=None)
def column_order(d: tuple) -> tuple:
    """``Pi_d`` in a linear extension of the order, larger elements first."""
    return tuple(reversed(covers_closure(d).linear_extension()))


# -- sections of the map wp over Pi^s_d ---------------------------------------


def canonical_section(d) -> dict:
    return {pi: canonical_word(pi) for pi in separated_elements(d)}


def distinguished_section(d) -> dict:
    """First distinguished word (in sorted order) of each fiber."""
    out = {}
    for pi in separated_elements(d):
        w = next((w for w in fiber(pi) if is_distinguished(w)), None)
        if w is None:
            raise ValueError(f"fiber of {pi} has no distinguished word")
        out[pi] = w
    return out


def random_section(d, seed: int = 0) -> dict:
    rng = random.Random(seed)
    return {pi: rng.choice(fiber(pi)) for pi in separated_elements(d)}


def _check_section(section: dict, d=None) -> tuple:
    if not section:
        if d is None:
            raise ValueError("empty section needs an explicit dimension vector")
        return tuple(d)
    first = next(iter(section))
    d = dim_vector(first) if d is None else tuple(d)
    for pi, w in section.items():
        if wp(w) != pi:
            raise ValueError(f"word {w} does not map to {pi}")
    if set(section) != set(separated_elements(d)):
        raise ValueError("section keys must be exactly the separated classes of dimension vector d")
    return d


@dataclass
class TransitionMatrix:
    """Coefficients of ``E_{w_sigma}`` in the ``u``-basis.

    Rows follow the separated classes and columns all of ``Pi_d``, both in
    ``column_order`` (larger first), so the separated block is upper triangular.
    """

    rows: list
    cols: list
    words: list
    entries: list

    def block(self) -> list:
        idx = [self.cols.index(pi) for pi in self.rows]
        return [[row[j] for j in idx] for row in self.entries]

    def is_upper_triangular(self) -> bool:
        B = self.block()
        m = len(B)
        strict_lower_zero = all(B[a][b].is_zero() for a in range(m) for b in range(a))
        return strict_lower_zero and all(not B[a][a].is_zero() for a in range(m))

    def block_rank(self) -> int:
        B = self.block()
        return rank(B, len(B)) if B else 0

    def diagonal(self) -> list:
        B = self.block()
        return [B[a][a] for a in range(len(B))]

    def to_json(self) -> dict:
        return {
            "rows": [pi.to_json() for pi in self.rows],
            "words": [w.to_json() for w in self.words],
            "cols": [pi.to_json() for pi in self.cols],
            "entries": [[c.to_json() for c in row] for row in self.entries],
        }


def transition_matrix(section: dict, d=None) -> TransitionMatrix:
    d = _check_section(section, d)
    cols = list(column_order(d))
    rows = [pi for pi in cols if pi in section]
    words = [section[pi] for pi in rows]
    entries = []
    for w in words:
        vec = expand_monomial(w)
        entries.append([vec.entries.get(la, LaurentPoly()) for la in cols])
    return TransitionMatrix(rows, cols, words, entries)


# -- Green's form and its radical ----------------------------------------------


def green_form_row(w: Word, d=None) -> list:
    """``<w|u_pi>' = v^eps(w) <w|pi>(v^2) / a_pi(v^2)`` over ``Pi_d`` in enumeration order."""
    d = content(w) if d is None else tuple(d)
    if content(w) != d:
        raise ValueError(f"word {w} does not have content {d}")
    elements = enumerate_pi(d)
    vec = bracket_vector(w, elements)
    eps = epsilon_word(w)
    out = []
    for pi in elements:
        c = vec.get(pi)
        if c is None:
            out.append(RatFunc(0))
        else:
            out.append(c.in_v().shift(eps).to_ratfunc() / _aut_v(pi))
    return out


@lru_cache(maxsize=None)
def _aut_v(pi: MultiPartition) -> RatFunc:
    return aut_poly(pi).in_v().to_ratfunc()


def _words_of_content(d):
    """All words of content ``d`` in lexicographic order."""
    n = len(d)

    def rec(rem):
        if not any(rem):
            yield ()
            return
        for i in range(n):
            if rem[i]:
                nxt = rem[:i] + (rem[i] - 1,) + rem[i + 1 :]
                for tail in rec(nxt):
                    yield (i + 1,) + tail

    for ls in rec(tuple(d)):
        yield Word(n, ls)


@lru_cache(maxsize=None)
def _radical(d: tuple):
    """Radical vectors normalized to 1 at one non-separated class and 0 at the others."""
    elements = enumerate_pi(d)
    sep = [pi for pi in elements if is_separated(pi)]
    nonsep = [pi for pi in elements if not is_separated(pi)]
    cols = sep + nonsep
    perm = [elements.index(pi) for pi in cols]
    target = len(sep)
    rows = []
    for pi in sep:
        row = green_form_row(canonical_word(pi), d)
        rows.append([row[k] for k in perm])
    if rows and rank(rows, len(cols)) < target:
        for w in _words_of_content(d):
            row = green_form_row(w, d)
            rows.append([row[k] for k in perm])
            if rank(rows, len(cols)) == target:
                break
    _, pivots = echelon(rows, len(cols)) if rows else ([], [])
    if len(pivots) != target or pivots != list(range(target)):
        raise AssertionError(f"Green form rows on Pi_{d} reach rank {len(pivots)}, expected {target}")
    vectors = nullspace(rows, len(cols)) if rows else []
    out = {}
    for x in vectors:
        free = next(k for k in range(target, len(cols)) if x[k] == 1)
        out[cols[free]] = HallVector(len(d), d, {cols[k]: x[k] for k in range(len(cols))})
    return out


def radical_basis(d) -> list:
    """Basis of the right radical of Green's form in degree ``d``.

    Each vector is scaled to integer polynomial coefficients with no common
    factor, with the coefficient of its smallest support element made to
    have negative leading term.
    """
    d = tuple(d)
    order = list(reversed(column_order(d)))  # smaller first
    out = []
    for pi, y in _radical(d).items():
        supp = [p for p in order if p in y.entries]
        polys = primitive(clear_denominators([y.entries[p] for p in supp]))
        lead = polys[0]
        sign = -1 if lead.lead > 0 else 1
        out.append(HallVector(len(d), d, {p: RatFunc(c * sign) for p, c in zip(supp, polys)}))
    return out


def pbw_expand(x: HallVector) -> HallVector:
    """Representative of ``x`` modulo the radical, supported on separated classes."""
    x = x.to_ratfunc()
    out = x
    for pi, y in _radical(x.d).items():
        c = x.coeff(pi)
        if c:
            out = out - y.scale(c)
    bad = [pi for pi in out.entries if not is_separated(pi)]
    if bad:
        raise ArithmeticError(f"projection left non-separated terms {bad}")
    return out


def in_radical(x: HallVector) -> bool:
    return pbw_expand(x).is_zero()


# -- twisted multiplication by generators --------------------------------------


def twisted_left(i: int, x: HallVector) -> HallVector:
    """``u_i * x`` in the twisted Hall algebra."""
    n = x.n
    d2 = tuple(a + b for a, b in zip(x.d, unit_vector(n, i)))
    twist = euler(unit_vector(n, i), x.d)
    return _product(x, d2, twist, lambda pi: top_step(pi, i))


def twisted_right(x: HallVector, i: int) -> HallVector:
    """``x * u_i`` in the twisted Hall algebra."""
    n = x.n
    d2 = tuple(a + b for a, b in zip(x.d, unit_vector(n, i)))
    twist = euler(x.d, unit_vector(n, i))
    return _product(x, d2, twist, lambda pi: socle_step(pi, i))


def _product(x, d2, twist, steps) -> HallVector:
    x = x.to_ratfunc()
    out = {}
    factor = LaurentPoly.monomial(twist).to_ratfunc()
    for pi in enumerate_pi(d2):
        total = RatFunc(0)
        for mu, phi in steps(pi):
            c = x.entries.get(mu)
            if c:
                total = total + c * phi.in_v().to_ratfunc()
        if total:
            out[pi] = total * factor
    return HallVector(x.n, d2, out)


def radical_ideal_check(d) -> bool:
    """Whether left and right products of radical vectors with every ``u_i`` stay in the radical."""
    d = tuple(d)
    n = len(d)
    for y in radical_basis(d):
        for i in range(1, n + 1):
            if not in_radical(twisted_left(i, y)) or not in_radical(twisted_right(y, i)):
                return False
    return True


def expected_diagonal(w: Word) -> LaurentPoly:
    """``v^eps(w) prod [[e_a]]!(v^2)``, the diagonal entry for a distinguished ``w``."""
    return diagonal_value(w).in_v().shift(epsilon_word(w))


def monomial_rank(section: dict, d=None) -> int:
    """Rank over ``Q(v)`` of the PBW coordinates of the section monomials."""
    d = _check_section(section, d)
    sep = separated_elements(d)
    rows = []
    for pi in sep:
        vec = pbw_expand(expand_monomial(section[pi]))
        rows.append([vec.coeff(s) if vec.coeff(s) else RatFunc(0) for s in sep])
    return rank(rows, len(sep)) if rows else 0

