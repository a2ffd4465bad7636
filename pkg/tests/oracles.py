"""Independent reference implementations used only by the tests.

These deliberately avoid the library's own helpers: partitions come from
sympy, dimension vectors are read off Young diagrams box by box, fibers are
counted by a forward sweep over words, and rational functions are compared
through sympy.
"""

from __future__ import annotations

from itertools import product

import sympy as sp
from sympy.utilities.iterables import partitions

from qhall.core import MultiPartition
from qhall.monoid import sigma_plus

V = sp.symbols("v")
Q = sp.symbols("q")


def all_partitions(m: int) -> list:
    out = []
    for p in partitions(m):
        out.append(tuple(sorted((k for k, c in p.items() for _ in range(c)), reverse=True)))
    return out if m else [()]


def dims_from_diagrams(n: int, parts) -> tuple:
    """Dimension vector of ``M(pi)``: column ``c`` of the diagram of ``pi^(i)`` is a
    summand with top ``i`` whose length is the column height."""
    d = [0] * n
    for i, p in enumerate(parts):
        width = p[0] if p else 0
        for c in range(width):
            height = sum(1 for x in p if x > c)
            for k in range(height):
                d[(i + k) % n] += 1
    return tuple(d)


def brute_multipartitions(d) -> set:
    n = len(d)
    total = sum(d)
    found = set()
    for sizes in product(range(total + 1), repeat=n):
        if sum(sizes) != total:
            continue
        for parts in product(*(all_partitions(s) for s in sizes)):
            if dims_from_diagrams(n, parts) == tuple(d):
                found.add(MultiPartition(n, parts))
    return found


def forward_fiber_count(pi: MultiPartition) -> int:
    """Count words ``w`` with ``wp(w) = pi`` by growing words on the left."""
    n = pi.n
    target = dims_from_diagrams(n, pi.parts)
    layer = {MultiPartition.empty(n): 1}
    for _ in range(sum(target)):
        nxt = {}
        for mu, c in layer.items():
            have = dims_from_diagrams(n, mu.parts)
            for i in range(1, n + 1):
                if have[i - 1] < target[i - 1]:
                    nu = sigma_plus(i, mu)
                    nxt[nu] = nxt.get(nu, 0) + c
        layer = nxt
    return layer.get(pi, 0)


def poly_to_sympy(p, var=Q):
    return sum(sp.Rational(c) * var**k for k, c in enumerate(p.coeffs))


def laurent_to_sympy(p):
    return sum(sp.Rational(c) * V ** (p.lo + k) for k, c in enumerate(p.coeffs))


def ratfunc_to_sympy(r):
    return poly_to_sympy(r.num, V) / poly_to_sympy(r.den, V)
