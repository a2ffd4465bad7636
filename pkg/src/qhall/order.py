"""Degeneration order on multipartitions and the extension order generated by cover moves.

``mu <= la`` (``M(la)`` degenerates to ``M(mu)``) is tested by comparing
``dim Hom(M, S_j[m])`` over the indecomposables.  Lengths ``m`` past
``|d| + n`` add nothing: for ``m >= l`` the count ``hom_dim_ind(i, l, j, m)``
only depends on ``m mod n``, and every summand has ``l <= |d|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .core import MultiPartition, add_part, dim_vector, dumps, enumerate_pi, remove_part, size, wrap
from .module_theory import hom_dim_ind


@lru_cache(maxsize=None)
def hom_profile(pi: MultiPartition, bound: int | None = None) -> tuple:
    """``dim Hom(M(pi), S_j[m])`` for ``j = 1..n`` and ``m = 1..bound``."""
    n = pi.n
    if bound is None:
        bound = size(pi) + n
    summ = pi.summands()
    return tuple(
        sum(hom_dim_ind(i, l, j, m, n) for i, l in summ) for j in range(1, n + 1) for m in range(1, bound + 1)
    )


def leq_deg(mu: MultiPartition, la: MultiPartition) -> bool:
    if mu.n != la.n or dim_vector(mu) != dim_vector(la):
        raise ValueError("degeneration order compares classes of equal dimension vector only")
    bound = size(la) + la.n
    return all(a >= b for a, b in zip(hom_profile(mu, bound), hom_profile(la, bound)))


def covers_down(la: MultiPartition) -> list:
    """All ``mu`` obtained from ``la`` by one exchange move.

    A move takes summands ``S_i[r+s+t]`` and ``S_{i+r}[s]`` (``s = 0`` meaning
    no second summand) and replaces them by ``S_i[r+s]`` and ``S_{i+r}[s+t]``.
    """
    n = la.n
    out = set()
    for i in range(1, n + 1):
        for big in set(la.dual_at(i)):
            rest_i = remove_part(la.dual_at(i), big)
            for r in range(1, big):
                j = wrap(i + r, n)
                pool = rest_i if j == wrap(i, n) else la.dual_at(j)
                for s in {0} | set(pool):
                    t = big - r - s
                    if t < 1:
                        continue
                    if j == wrap(i, n):
                        q = add_part(add_part(remove_part(rest_i, s), r + s), s + t)
                        mu = la.with_duals({i: q})
                    else:
                        mu = la.with_duals(
                            {i: add_part(rest_i, r + s), j: add_part(remove_part(pool, s), s + t)}
                        )
                    out.add(mu)
    return sorted(out, key=MultiPartition.sort_key)


@dataclass
class Poset:
    """A finite poset on one ``Pi_d``; ``leq[a][b]`` means ``elements[a] <= elements[b]``."""

    elements: list
    leq: list
    covers: list = field(default_factory=list)

    def index(self, pi: MultiPartition) -> int:
        return self.elements.index(pi)

    def less(self, a: MultiPartition, b: MultiPartition) -> bool:
        return self.leq[self.index(a)][self.index(b)]

    def relations(self) -> set:
        """Strict relations ``(a, b)`` with ``a < b``."""
        E = self.elements
        return {(E[a], E[b]) for a in range(len(E)) for b in range(len(E)) if a != b and self.leq[a][b]}

    def linear_extension(self) -> list:
        """Elements sorted so that ``a < b`` puts ``a`` first; ties keep enumeration order."""
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.elements)))
        g.add_edges_from((a, b) for a, b in self.covers_idx())
        order = list(nx.lexicographical_topological_sort(g))
        return [self.elements[k] for k in order]

    def covers_idx(self):
        return [(self.index(a), self.index(b)) for a, b in self.covers]

    def to_json(self) -> dict:
        return {
            "elements": [e.to_json() for e in self.elements],
            "leq": [[int(x) for x in row] for row in self.leq],
            "covers": [[self.index(a), self.index(b)] for a, b in self.covers],
        }

    def to_dot(self) -> str:
        lines = ["digraph poset {"]
        for k, e in enumerate(self.elements):
            label = dumps(e.to_json()).replace('"', '\\"')
            lines.append(f'  n{k} [label="{label}"];')
        for a, b in self.covers_idx():
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _poset_from_graph(elements: list, g: nx.DiGraph) -> Poset:
    closure = nx.transitive_closure_dag(g)
    idx = {e: k for k, e in enumerate(elements)}
    m = len(elements)
    leq = [[a == b for b in range(m)] for a in range(m)]
    for a, b in closure.edges:
        leq[idx[a]][idx[b]] = True
    red = nx.transitive_reduction(g)
    covers = sorted(red.edges, key=lambda e: (idx[e[0]], idx[e[1]]))
    return Poset(elements, leq, covers)


def covers_closure(d) -> Poset:
    """The extension order on ``Pi_d``: closure of the exchange moves."""
    elements = enumerate_pi(d)
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    for la in elements:
        for mu in covers_down(la):
            g.add_edge(mu, la)
    return _poset_from_graph(elements, g)


def degeneration_poset(d) -> Poset:
    """The degeneration order on ``Pi_d`` from Hom dimensions."""
    elements = enumerate_pi(d)
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    for a in elements:
        for b in elements:
            if a != b and leq_deg(a, b):
                g.add_edge(a, b)
    return _poset_from_graph(elements, g)


def ideal(la: MultiPartition) -> list:
    """``{mu : mu <= la}`` in enumeration order."""
    return [mu for mu in enumerate_pi(dim_vector(la)) if leq_deg(mu, la)]
