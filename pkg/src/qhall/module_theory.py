"""Numerical invariants of the modules ``M(pi)``.

Hom dimensions between indecomposables use the closed form: a map
``S_i[l] -> S_j[m]`` is determined by the length ``l'`` of its image, which
must be a quotient of ``S_i[l]`` and a submodule of ``S_j[m]``.  Writing
``t = m - l'`` this gives ``max(0, m-l) <= t <= m-1`` and ``t = i-j (mod n)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import MultiPartition, dim_vector, wrap
from .poly import Poly


@dataclass(frozen=True)
class ModuleSummands:
    """Multiset of indecomposables ``S_i[l]`` as a sorted tuple of pairs."""

    n: int
    summands: tuple = ()

    def __post_init__(self):
        for i, l in self.summands:
            if not 1 <= i <= self.n or l < 1:
                raise ValueError(f"bad summand S_{i}[{l}] for n={self.n}")
        object.__setattr__(self, "summands", tuple(sorted(tuple(s) for s in self.summands)))

    @classmethod
    def from_multipartition(cls, pi: MultiPartition) -> "ModuleSummands":
        return cls(pi.n, tuple(pi.summands()))

    def to_multipartition(self) -> MultiPartition:
        return MultiPartition.from_summands(self.n, self.summands)

    def __add__(self, other: "ModuleSummands") -> "ModuleSummands":
        _check_n(self, other)
        return ModuleSummands(self.n, self.summands + other.summands)

    def dim(self):
        return dim_vector(self.to_multipartition())

    def to_json(self) -> dict:
        return {"n": self.n, "summands": [list(s) for s in self.summands]}

    @classmethod
    def from_json(cls, obj) -> "ModuleSummands":
        return cls(int(obj["n"]), tuple(tuple(s) for s in obj["summands"]))


def _as_summands(M) -> ModuleSummands:
    if isinstance(M, MultiPartition):
        return ModuleSummands.from_multipartition(M)
    return M


def _check_n(M, N):
    if M.n != N.n:
        raise ValueError(f"modules over different quivers (n={M.n} vs n={N.n})")


def hom_dim_ind(i: int, l: int, j: int, m: int, n: int) -> int:
    """``dim Hom(S_i[l], S_j[m])`` for the cyclic quiver on ``n`` vertices."""
    if l < 1 or m < 1:
        raise ValueError("lengths must be positive")
    lo = max(0, m - l)
    hi = m - 1
    r = (i - j) % n
    # count t in [lo, hi] with t = r (mod n)
    first = lo + (r - lo) % n
    return 0 if first > hi else (hi - first) // n + 1


def hom_dim(M, N) -> int:
    M, N = _as_summands(M), _as_summands(N)
    _check_n(M, N)
    return sum(hom_dim_ind(i, l, j, m, M.n) for i, l in M.summands for j, m in N.summands)


def end_dim(M) -> int:
    return hom_dim(M, M)


def euler(a: Sequence[int], b: Sequence[int]) -> int:
    """Euler form ``sum a_i b_i - sum a_i b_{i+1}`` with cyclic indices."""
    if len(a) != len(b):
        raise ValueError("dimension vectors of different lengths")
    n = len(a)
    return sum(a[i] * b[i] for i in range(n)) - sum(a[i] * b[(i + 1) % n] for i in range(n))


def ext_dim(M, N) -> int:
    M, N = _as_summands(M), _as_summands(N)
    _check_n(M, N)
    e = hom_dim(M, N) - euler(M.dim(), N.dim())
    assert e >= 0, f"negative Ext dimension {e}: Hom dimension formula is broken"
    return e


def orbit_dim(pi: MultiPartition) -> int:
    d = dim_vector(pi)
    return sum(x * x for x in d) - end_dim(pi)


def reverse_dual(pi: MultiPartition) -> MultiPartition:
    """Class of the vector-space dual of ``M(pi)``, relabeled by ``j -> -j``.

    Dualizing reverses the arrows; the relabeling restores the orientation
    and sends ``S_i[l]`` (socle ``i+l-1``) to ``S_{-(i+l-1)}[l]``.
    """
    n = pi.n
    return MultiPartition.from_summands(n, [(wrap(1 - i - l, n), l) for i, l in pi.summands()])


def dual_vertex(i: int, n: int) -> int:
    return wrap(-i, n)


def gl_order(m: int) -> Poly:
    """``|GL_m(F_q)| = prod_{j<m} (q^m - q^j)`` as a polynomial in ``q``."""
    out = Poly.one()
    for j in range(m):
        out = out * (Poly.monomial(m) - Poly.monomial(j))
    return out


def aut_poly(pi: MultiPartition) -> Poly:
    """Monic ``a_pi`` with ``a_pi(q) = |Aut M_q(pi)|`` over a field of ``q`` elements."""
    mult = Counter(pi.summands())
    e = end_dim(pi)
    out = Poly.monomial(e - sum(m * m for m in mult.values()))
    for m in mult.values():
        out = out * gl_order(m)
    return out
