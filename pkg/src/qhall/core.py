"""Partitions, multipartitions, words and dimension vectors.

A multipartition ``pi`` of length ``n`` indexes the nilpotent representation
``M(pi)`` of the cyclic quiver with vertices ``1..n`` and arrows ``i -> i+1``.
The dual (conjugate) of the ``i``-th component lists the lengths of the
indecomposable summands ``S_i[l]`` with top at vertex ``i``; most algorithms
in this package work in those dual coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Partition = tuple  # normalized: weakly decreasing positive ints
DimVector = tuple


def partition(seq: Iterable[int]) -> Partition:
    """Normalize a sequence of non-negative integers to a partition tuple."""
    parts = [int(p) for p in seq]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def dual(p: Sequence[int]) -> Partition:
    """Conjugate partition: ``dual(p)[j-1] = #{i : p_i >= j}``."""
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def part(p: Sequence[int], j: int) -> int:
    """The ``j``-th part (1-based) of ``p``, reading missing parts as 0."""
    return p[j - 1] if 0 < j <= len(p) else 0


def remove_part(p: Partition, value: int) -> Partition:
    """Delete one copy of ``value`` from ``p`` (value 0 deletes nothing)."""
    if value == 0:
        return p
    lst = list(p)
    lst.remove(value)
    return tuple(lst)


def add_part(p: Partition, value: int) -> Partition:
    if value == 0:
        return p
    return partition(p + (value,))


def wrap(x: int, n: int) -> int:
    """Cyclic vertex arithmetic on ``1..n``: ``wrap(n + 1) == 1``."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class MultiPartition:
    """An ``n``-tuple of partitions ``(pi^(1), ..., pi^(n))``."""

    n: int
    parts: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        parts = tuple(partition(p) for p in self.parts)
        if len(parts) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def empty(cls, n: int) -> "MultiPartition":
        return cls(n, ((),) * n)

    @classmethod
    def from_duals(cls, n: int, duals: Sequence[Sequence[int]]) -> "MultiPartition":
        """Build from dual components, i.e. summand lengths per top vertex."""
        return cls(n, tuple(dual(q) for q in duals))

    @classmethod
    def from_summands(cls, n: int, summands: Iterable[tuple]) -> "MultiPartition":
        """Build from pairs ``(i, l)``, one per summand ``S_i[l]``."""
        duals = [[] for _ in range(n)]
        for i, l in summands:
            if not 1 <= i <= n or l < 1:
                raise ValueError(f"bad summand S_{i}[{l}] for n={n}")
            duals[i - 1].append(l)
        return cls.from_duals(n, duals)

    @cached_property
    def duals(self) -> tuple:
        return tuple(dual(p) for p in self.parts)

    def dual_at(self, i: int) -> Partition:
        """Dual component at vertex ``i``, with cyclic indexing."""
        return self.duals[wrap(i, self.n) - 1]

    def summands(self) -> list:
        """Pairs ``(i, l)`` listing the summands ``S_i[l]`` of ``M(pi)``."""
        return [(i + 1, l) for i, q in enumerate(self.duals) for l in q]

    def with_duals(self, changes: dict) -> "MultiPartition":
        duals = list(self.duals)
        for i, q in changes.items():
            duals[wrap(i, self.n) - 1] = q
        return MultiPartition.from_duals(self.n, duals)

    def is_empty(self) -> bool:
        return not any(self.parts)

    def to_json(self) -> dict:
        return {"n": self.n, "parts": [list(p) for p in self.parts]}

    @classmethod
    def from_json(cls, obj) -> "MultiPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["n"]), tuple(tuple(p) for p in obj["parts"]))
        except KeyError as exc:
            raise ValueError(f"multipartition JSON is missing field {exc}") from None

    def sort_key(self):
        return self.parts

    def __str__(self):
        return "(" + ",".join("(" + ",".join(map(str, p)) + ")" if p else "∅" for p in self.parts) + ")"


def size(pi: MultiPartition) -> int:
    return sum(sum(p) for p in pi.parts)


def dim_vector(pi: MultiPartition) -> DimVector:
    """Dimension vector of ``M(pi)``; ``S_i[l]`` covers vertices ``i..i+l-1``."""
    d = [0] * pi.n
    for i, l in pi.summands():
        full, rest = divmod(l, pi.n)
        for j in range(pi.n):
            d[j] += full
        for k in range(rest):
            d[(i - 1 + k) % pi.n] += 1
    return tuple(d)


def unit_vector(n: int, i: int) -> DimVector:
    return tuple(1 if j == wrap(i, n) else 0 for j in range(1, n + 1))


@dataclass(frozen=True)
class Word:
    """A word ``i_1 i_2 ... i_m`` on the alphabet ``1..n``."""

    n: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        bad = [x for x in letters if not 1 <= x <= self.n]
        if bad:
            raise ValueError(f"letters {bad} outside 1..{self.n}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, n: int, text: str) -> "Word":
        """Parse ``"1,2,1"``; a bare digit string is accepted when ``n <= 9``."""
        text = text.strip()
        if not text:
            return cls(n, ())
        if "," in text or " " in text:
            return cls(n, tuple(int(x) for x in text.replace(",", " ").split()))
        if n > 9:
            raise ValueError("compact digit words are ambiguous for n > 9")
        return cls(n, tuple(int(c) for c in text))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.n != self.n:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.n, self.letters + other.letters)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.letters)) or "ε"
        return ",".join(map(str, self.letters)) or "ε"

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj) -> "Word":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["n"]), tuple(obj["letters"]))
        except KeyError as exc:
            raise ValueError(f"word JSON is missing field {exc}") from None


def content(w: Word) -> DimVector:
    d = [0] * w.n
    for x in w:
        d[x - 1] += 1
    return tuple(d)


def enumerate_pi(d: Sequence[int]) -> list:
    """All multipartitions with dimension vector ``d``, sorted by parts."""
    d = tuple(int(x) for x in d)
    n = len(d)
    if n < 2 or any(x < 0 for x in d):
        raise ValueError(f"bad dimension vector {d}")
    total = sum(d)
    # summand types in a fixed order; a multiset is chosen as a non-increasing index run
    types = [(i, l) for l in range(1, total + 1) for i in range(1, n + 1)]
    vecs = [dim_vector(MultiPartition.from_summands(n, [t])) for t in types]
    found = []

    def rec(start, remaining, chosen):
        if not any(remaining):
            found.append(MultiPartition.from_summands(n, chosen))
            return
        for k in range(start, len(types)):
            v = vecs[k]
            if all(a <= b for a, b in zip(v, remaining)):
                rec(k, tuple(b - a for a, b in zip(v, remaining)), chosen + [types[k]])

    rec(0, d, [])
    return sorted(found, key=MultiPartition.sort_key)


def enumerate_pi_of_size(n: int, m: int) -> list:
    """All multipartitions of total size ``m`` with ``n`` components."""
    out = []
    for d in compositions(m, n):
        out.extend(enumerate_pi(d))
    return out


def compositions(total: int, n: int):
    """All length-``n`` tuples of non-negative ints summing to ``total``."""
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def dumps(obj) -> str:
    """Compact canonical JSON used by golden files and the CLI."""
    return json.dumps(obj, separators=(",", ":"))
