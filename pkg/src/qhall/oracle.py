"""Brute-force checks with explicit representations over a prime field.

Nothing in the library depends on this module.  It builds ``M(pi)`` as
matrices over ``F_p`` and counts homomorphisms, automorphisms, submodules
and composition series directly, so the closed formulas elsewhere can be
compared against plain linear algebra.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .core import MultiPartition


# -- linear algebra mod p ----------------------------------------------------


def rref_mod(A, p: int):
    """Reduced row echelon form of ``A`` over ``F_p`` and its pivot columns."""
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2 or A.size == 0:
        return A.reshape(A.shape[0] if A.ndim == 2 else 0, -1), []
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for k in range(rows):
            if k != r and A[k, c]:
                A[k] = (A[k] - A[k, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank_mod(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod(A, p)[1])


def nullspace_mod(A, p: int, ncols: int | None = None):
    """Columns spanning ``{x : A x = 0}`` over ``F_p``."""
    A = np.asarray(A, dtype=np.int64)
    if ncols is None:
        ncols = A.shape[1]
    if A.size == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref_mod(A, p)
    free = [c for c in range(ncols) if c not in pivots]
    N = np.zeros((ncols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        N[f, k] = 1
        for r, c in enumerate(pivots):
            N[c, k] = (-R[r, f]) % p
    return N


def solve_mod(B, Y, p: int):
    """``X`` with ``B X = Y`` for ``B`` of full column rank."""
    B = np.asarray(B, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    k = B.shape[1]
    if k == 0:
        return np.zeros((0, Y.shape[1]), dtype=np.int64)
    R, pivots = rref_mod(np.hstack([B, Y]), p)
    assert pivots[:k] == list(range(k)) and (len(pivots) == k or pivots[k] >= k + Y.shape[1]), "not solvable"
    return R[:k, k:] % p


def subspaces(dim: int, k: int, p: int):
    """All ``k``-dimensional subspaces of ``F_p^dim`` as ``dim x k`` basis matrices."""
    for piv in combinations(range(dim), k):
        free = [(r, c) for r in range(k) for c in range(dim) if c > piv[r] and c not in piv]
        for vals in product(range(p), repeat=len(free)):
            M = np.zeros((k, dim), dtype=np.int64)
            for r, c in enumerate(piv):
                M[r, c] = 1
            for (r, c), x in zip(free, vals):
                M[r, c] = x
            yield M.T


# -- explicit representations --------------------------------------------------


@dataclass
class Rep:
    """``maps[v]`` sends ``F_p^{dims[v]}`` to ``F_p^{dims[v+1]}`` (0-based, cyclic)."""

    n: int
    p: int
    dims: list
    maps: list

    def map(self, v: int):
        return self.maps[v % self.n]

    def path(self, v: int, length: int):
        """Matrix of the path of ``length`` arrows starting at vertex ``v``."""
        P = np.eye(self.dims[v % self.n], dtype=np.int64)
        for k in range(length):
            P = (self.map(v + k) @ P) % self.p
        return P


def rep_of(pi: MultiPartition, p: int) -> Rep:
    """``M(pi)`` with one basis vector per box of each summand."""
    n = pi.n
    slots = [[] for _ in range(n)]
    for s, (i, l) in enumerate(pi.summands()):
        for depth in range(l):
            slots[(i - 1 + depth) % n].append((s, depth))
    dims = [len(x) for x in slots]
    index = [{key: k for k, key in enumerate(x)} for x in slots]
    maps = []
    for v in range(n):
        w = (v + 1) % n
        F = np.zeros((dims[w], dims[v]), dtype=np.int64)
        for (s, depth), k in index[v].items():
            tgt = index[w].get((s, depth + 1))
            if tgt is not None:
                F[tgt, k] = 1
        maps.append(F)
    return Rep(n, p, dims, maps)


def restrict(R: Rep, bases: list) -> Rep:
    """The subrepresentation spanned by ``bases[v]`` (columns), in those coordinates."""
    n, p = R.n, R.p
    maps = []
    for v in range(n):
        w = (v + 1) % n
        img = (R.maps[v] @ bases[v]) % p
        maps.append(solve_mod(bases[w], img, p))
    return Rep(n, p, [b.shape[1] for b in bases], maps)


def classify(R: Rep, sub: list | None = None) -> MultiPartition:
    """Isomorphism class of ``R`` (or of ``R / sub``) from ranks of path maps.

    ``g(v, L) = r(v, L-1) - r(v-1, L)`` counts summands with top ``v`` and
    length at least ``L``, where ``r(v, l)`` is the rank of the length-``l``
    path map starting at ``v``.
    """
    n, p = R.n, R.p
    if sub is None:
        sub = [np.zeros((d, 0), dtype=np.int64) for d in R.dims]
    total = sum(R.dims) - sum(b.shape[1] for b in sub)

    def r(v, l):
        v %= n
        P = R.path(v, l)
        S = sub[(v + l) % n]
        if P.size == 0:
            return 0
        return rank_mod(np.hstack([P, S]), p) - rank_mod(S, p)

    summands = []
    for v in range(n):
        g = [r(v, L - 1) - r(v - 1, L) for L in range(1, total + 2)]
        for L in range(1, total + 1):
            summands += [(v + 1, L)] * (g[L - 1] - g[L])
    return MultiPartition.from_summands(n, summands)


def hom_space(M: Rep, N: Rep):
    """Basis of ``Hom(M, N)`` as columns over the stacked unknowns ``phi_v``."""
    n, p = M.n, M.p
    offs, tot = [], 0
    for v in range(n):
        offs.append(tot)
        tot += N.dims[v] * M.dims[v]
    eqs = []
    for v in range(n):
        w = (v + 1) % n
        # phi_w f_v - g_v phi_v = 0, one equation per entry
        for a in range(N.dims[w]):
            for b in range(M.dims[v]):
                row = np.zeros(tot, dtype=np.int64)
                for c in range(M.dims[w]):
                    row[offs[w] + a * M.dims[w] + c] += M.maps[v][c, b]
                for c in range(N.dims[v]):
                    row[offs[v] + c * M.dims[v] + b] -= N.maps[v][a, c]
                eqs.append(row % p)
    A = np.array(eqs, dtype=np.int64).reshape(len(eqs), tot)
    return nullspace_mod(A, p, tot), offs


def hom_dim(M: Rep, N: Rep) -> int:
    return hom_space(M, N)[0].shape[1]


def ext_dim(M: Rep, N: Rep) -> int:
    """``dim Ext^1(M, N)`` as the cokernel of ``(phi_v) -> (g phi_v - phi_{v+1} f)``."""
    n, p = M.n, M.p
    src = sum(N.dims[v] * M.dims[v] for v in range(n))
    tgt = sum(N.dims[(v + 1) % n] * M.dims[v] for v in range(n))
    return tgt - (src - hom_dim(M, N))


def count_automorphisms(M: Rep) -> int:
    basis, offs = hom_space(M, M)
    p, n = M.p, M.n
    count = 0
    for coeffs in product(range(p), repeat=basis.shape[1]):
        x = (basis @ np.array(coeffs, dtype=np.int64)) % p if basis.shape[1] else np.zeros(basis.shape[0], np.int64)
        ok = True
        for v in range(n):
            d = M.dims[v]
            phi = x[offs[v] : offs[v] + d * d].reshape(d, d)
            if rank_mod(phi, p) < d:
                ok = False
                break
        count += ok
    return count


def _full(R: Rep):
    return [np.eye(d, dtype=np.int64) for d in R.dims]


def cotop_submodules(R: Rep, i: int, a: int = 1):
    """Submodules ``N`` with ``R/N`` isomorphic to ``a`` copies of ``S_i`` (``i`` 1-based)."""
    n, p = R.n, R.p
    v = i - 1
    prev = R.map(v - 1)
    # functionals on R_v vanishing on the image of the incoming arrow
    F = nullspace_mod(prev.T, p, R.dims[v]) if R.dims[v] else np.zeros((0, 0), np.int64)
    k = F.shape[1]
    if a > k:
        return
    for S in subspaces(k, a, p):
        funcs = (F @ S) % p
        K = nullspace_mod(funcs.T, p, R.dims[v])
        bases = _full(R)
        bases[v] = K
        yield restrict(R, bases)


def top_step_counts(R: Rep, i: int, a: int = 1) -> Counter:
    return Counter(classify(N) for N in cotop_submodules(R, i, a))


def socle_step_counts(R: Rep, i: int) -> Counter:
    """Classes of ``R/S`` over simple submodules ``S = S_i``."""
    n, p = R.n, R.p
    v = i - 1
    K = nullspace_mod(R.map(v), p, R.dims[v]) if R.dims[v] else np.zeros((0, 0), np.int64)
    out = Counter()
    for S in subspaces(K.shape[1], 1, p):
        x = (K @ S) % p
        sub = [np.zeros((d, 0), dtype=np.int64) for d in R.dims]
        sub[v] = x
        out[classify(R, sub)] += 1
    return out


def count_composition_series(R: Rep, letters) -> int:
    """Number of composition series of ``R`` of the given type, top factor first."""
    if not letters:
        return int(sum(R.dims) == 0)
    return sum(count_composition_series(N, letters[1:]) for N in cotop_submodules(R, letters[0]))
