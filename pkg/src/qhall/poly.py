"""Exact univariate polynomials, Laurent polynomials and rational functions.

``Poly`` is dense with coefficients low-to-high.  Integer coefficients give
the Hall polynomials in ``q``; ``Fraction`` coefficients are used for the
numerators and denominators of ``RatFunc`` in ``v``.  ``LaurentPoly`` holds
integer Laurent polynomials in ``v`` (``q = v^2``).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _num_json(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term(c, var, k) -> str:
    if k == 0:
        return str(c)
    mono = var if k == 1 else f"{var}^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


class Poly:
    """Dense polynomial in one variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        self.coeffs = _trim(coeffs)
        self.var = var

    @classmethod
    def const(cls, c, var="q") -> "Poly":
        return cls((c,), var)

    @classmethod
    def one(cls, var="q") -> "Poly":
        return cls((1,), var)

    @classmethod
    def zero(cls, var="q") -> "Poly":
        return cls((), var)

    @classmethod
    def monomial(cls, k: int, c=1, var="q") -> "Poly":
        if k < 0:
            raise ValueError("negative exponent in a polynomial")
        return cls((0,) * k + (c,), var)

    # -- basic protocol --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = [_term(c, self.var, k) for k, c in enumerate(self.coeffs) if c != 0]
        return "+".join(terms).replace("+-", "-")

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,), self.var)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs), self.var)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.one(self.var)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by ``var^k``."""
        return Poly((0,) * k + self.coeffs, self.var) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- field operations (Fraction coefficients) ------------------------
    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dl = Fraction(other.lead)
        dd = other.degree
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / dl
            if c:
                quo[k - dd] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dd + j] -= c * b
        return Poly(quo, self.var), Poly(rem[:dd] if dd > 0 else [], self.var)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (Fraction(1) / Fraction(self.lead))

    def integral(self) -> "Poly":
        """Coerce integral Fraction coefficients back to ``int``."""
        cs = []
        for c in self.coeffs:
            c = Fraction(c)
            cs.append(c.numerator if c.denominator == 1 else c)
        return Poly(cs, self.var)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive in ``Z[x]``."""
        if self.is_zero():
            return Fraction(1)
        fr = [Fraction(c) for c in self.coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in fr:
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        return Fraction(num, den)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [_num_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "Poly":
        return cls([Fraction(c) if isinstance(c, str) else c for c in obj["coeffs"]], obj.get("var", "q"))

    def in_v(self) -> "LaurentPoly":
        """Substitute ``q = v^2``."""
        out = [0] * max(0, 2 * len(self.coeffs) - 1)
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return LaurentPoly(0, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over ``Q``."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class LaurentPoly:
    """Integer Laurent polynomial ``sum_k c_k v^(lo+k)``."""

    __slots__ = ("lo", "coeffs")

    def __init__(self, lo: int = 0, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        cs = cs[k:]
        self.lo = lo + k if cs else 0
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls(k, (c,))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.lo == other.lo and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly(0, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        return f"LaurentPoly({self.lo}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = [_term(c, "v", self.lo + k) for k, c in enumerate(self.coeffs) if c]
        return "+".join(terms).replace("+-", "-")

    def terms(self):
        return {self.lo + k: c for k, c in enumerate(self.coeffs) if c}

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.lo + len(self.coeffs), other.lo + len(other.coeffs))
        out = [0] * (hi - lo)
        for src in (self, other):
            for k, c in enumerate(src.coeffs):
                out[src.lo - lo + k] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.lo, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.lo, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.lo + k, self.coeffs)

    def __call__(self, x):
        x = Fraction(x)
        return sum(c * x ** (self.lo + k) for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"var": "v", "lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        return cls(int(obj["lo"]), obj["coeffs"])

    def to_ratfunc(self) -> "RatFunc":
        if self.lo >= 0:
            return RatFunc(Poly((0,) * self.lo + self.coeffs, "v"))
        return RatFunc(Poly(self.coeffs, "v"), Poly.monomial(-self.lo, var="v"))


class RatFunc:
    """Element of ``Q(v)`` kept as ``num/den``, gcd-reduced, ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly((num,), "v")
        if den is None:
            den = Poly.one("v")
        elif not isinstance(den, Poly):
            den = Poly((den,), "v")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num = Poly(num.coeffs, "v")
        den = Poly(den.coeffs, "v")
        if num.is_zero():
            den = Poly.one("v")
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = Fraction(den.lead)
        self.num = (num * (1 / lead)).integral()
        self.den = (den * (1 / lead)).integral()

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return x.to_ratfunc()
        if isinstance(x, Poly):
            return cls(x)
        if isinstance(x, (int, Fraction)):
            return cls(Poly((x,), "v"))
        raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({self.num}, {self.den})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __call__(self, x):
        return Fraction(self.num(Fraction(x))) / Fraction(self.den(Fraction(x)))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        return cls(Poly.from_json(obj["num"]), Poly.from_json(obj["den"]))
