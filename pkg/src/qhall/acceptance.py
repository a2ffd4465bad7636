"""The acceptance checks, runnable from tests and from ``qhall verify``.

Each check returns ``(passed, detail)``.  ``run`` times them and collects
``Result`` records in a fixed order.  The ``quick`` level covers the golden
examples, ``full`` adds the exhaustive sweeps and the finite-field oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .basis import (
    HallVector,
    canonical_section,
    distinguished_section,
    expand_monomial,
    pbw_expand,
    radical_basis,
    random_section,
    separated_elements,
    transition_matrix,
)
from .core import MultiPartition, Word, compositions, content, enumerate_pi, enumerate_pi_of_size
from .hall import bracket_vector, diagonal_value, isotypic_step, reduced_filtration_count, socle_step, top_step
from .module_theory import aut_poly, hom_dim_ind
from .monoid import fiber, fiber_size, is_distinguished, sigma_minus, sigma_plus, wp
from .order import covers_closure, degeneration_poset, leq_deg
from .poly import LaurentPoly, Poly, RatFunc


def runs(n: int, text: str) -> Word:
    """Word from space-separated runs such as ``"1 2^2 1^2"``."""
    letters = []
    for tok in text.split():
        base, _, exp = tok.partition("^")
        letters += [int(base)] * int(exp or 1)
    return Word(n, tuple(letters))


def mp(n: int, *parts) -> MultiPartition:
    return MultiPartition(n, tuple(tuple(p) for p in parts))


BIG = mp(3, (4, 3, 3, 1, 1), (3, 2, 1), (2, 2))
BIG_FIBER_SIZE = 141
BIG_WORDS = [
    "1 2^2 1^2 3^4 2^4 1^5 3^3 2",
    "2 1^3 2 3^4 2^4 1^5 3^3 2",
    "2 1^3 3 2 3^3 2^4 1^5 3^3 2",
    "2 1^3 3^2 2 3^2 2^4 1^5 3^3 2",
    "2 1^3 3^3 2^5 3 1^5 3^3 2",
    "2 1^3 3^3 2^5 1 3 1^4 3^3 2",
    "2 1^3 3^3 2^5 1^2 3 1^3 3^3 2",
    "2 1^3 3^3 2^5 1^3 3 1^2 3^3 2",
    "2 1^3 3^3 2^5 1^4 3^4 1 2",
]

SMALL = mp(3, (3, 2, 1), (1, 1), (1,))
SMALL_WORDS = [
    "1 2^2 1^2 3^3 2",
    "2 1^3 3^2 2^2 3",
    "2 1 2 1^2 3^3 2",
    "2 1^3 2 3^3 2",
    "2 1^3 3^2 2 3 2",
    "2 1^3 3 2 3^2 2",
    "2 1^2 2 1 3^3 2",
]
SMALL_DISTINGUISHED = 5


def check_sigma_goldens():
    cases = [
        (sigma_plus(1, BIG), mp(3, (5, 4, 4, 2, 1), (2, 1), (2, 2))),
        (sigma_plus(2, BIG), mp(3, (4, 3, 3, 1, 1), (4, 3, 2), (1, 1))),
        (sigma_plus(3, BIG), mp(3, (3, 2, 2), (3, 2, 1), (3, 3, 1, 1, 1, 1))),
        (sigma_minus(1, BIG), mp(3, (3, 2, 2), (4, 3, 2, 1), (2, 2))),
        (sigma_minus(2, BIG), mp(3, (4, 3, 3, 1, 1), (2, 1), (3, 3))),
        (sigma_minus(1, sigma_plus(1, mp(2, (2, 1, 1), (1, 1)))), mp(2, (2, 2, 2), ())),
    ]
    bad = [f"got {got}, expected {exp}" for got, exp in cases if got != exp]
    return not bad, f"{len(cases) - len(bad)}/{len(cases)} match" + ("; " + "; ".join(bad) if bad else "")


def check_fiber_census():
    size = fiber_size(BIG)
    members = sum(wp(runs(3, w)) == BIG for w in BIG_WORDS)
    ok = size == BIG_FIBER_SIZE and members == len(BIG_WORDS)
    return ok, f"fiber size {size} (expected {BIG_FIBER_SIZE}); {members}/{len(BIG_WORDS)} listed words are members"


def check_distinguished_census():
    words = [runs(3, w) for w in SMALL_WORDS]
    fib = fiber(SMALL)
    same = set(fib) == set(words)
    marks = [is_distinguished(w) for w in words]
    expected = [k < SMALL_DISTINGUISHED for k in range(len(words))]
    ok = same and marks == expected
    return ok, f"fiber has {len(fib)} words, equal to list: {same}; distinguished marks {marks}"


def _dims(n: int, max_size: int):
    for s in range(1, max_size + 1):
        yield from compositions(s, n)


def check_order_coincidence():
    cases = [(2, 6), (3, 6), (4, 5)]
    count = bad = 0
    for n, m in cases:
        for d in _dims(n, m):
            count += 1
            if degeneration_poset(d).leq != covers_closure(d).leq:
                bad += 1
    return bad == 0, f"{count} dimension vectors, {bad} mismatches"


def _words(n: int, max_len: int):
    for L in range(max_len + 1):
        for ls in product(range(1, n + 1), repeat=L):
            yield Word(n, ls)


def check_bracket_support():
    count = bad = 0
    for n in (2, 3):
        for w in _words(n, 6):
            count += 1
            top = wp(w)
            vec = bracket_vector(w)
            for la in enumerate_pi(content(w)):
                c = vec.get(la)
                if (c is not None) != leq_deg(la, top) or (c is not None and any(x < 0 for x in c.coeffs)):
                    bad += 1
    return bad == 0, f"{count} words, {bad} failures"


def check_distinguished_diagonal():
    from .hall import bracket

    count = bad = 0
    for n in (2, 3):
        for w in _words(n, 7):
            count += 1
            top = wp(w)
            dist = is_distinguished(w)
            if dist != (reduced_filtration_count(w, top) == Poly.one()):
                bad += 1
            elif dist and bracket(w, top) != diagonal_value(w):
                bad += 1
    return bad == 0, f"{count} words, {bad} failures"


def check_small_algebra():
    a = mp(2, (2,), (1,))
    b = mp(2, (2, 1), ())
    g = mp(2, (1,), (1, 1))
    dl = mp(2, (1, 1, 1), ())
    d = (2, 1)
    v = LaurentPoly.monomial(1).to_ratfunc()
    one = RatFunc(1)
    problems = []

    if set(enumerate_pi(d)) != {a, b, g, dl}:
        problems.append("element set")
    want = {(a, b), (a, g), (b, dl), (g, dl), (a, dl)}
    for name, poset in (("degeneration", degeneration_poset(d)), ("extension", covers_closure(d))):
        if poset.relations() != want:
            problems.append(f"{name} relations")
        covers = set(poset.covers)
        if covers != want - {(a, dl)}:
            problems.append(f"{name} covers")

    def vec(coeffs):
        return HallVector(2, d, {k: RatFunc.coerce(c) for k, c in coeffs.items()})

    v4 = v * v * v * v
    rad = radical_basis(d)
    if len(rad) != 1 or rad[0] != vec({a: one - v4, b: 1, g: 1, dl: 1}):
        problems.append(f"radical {[str(x) for x in rad]}")
    inv = one / (v4 - one)
    if pbw_expand(HallVector.basis_vector(a)) != vec({b: inv, g: inv, dl: inv}):
        problems.append("pbw of u_alpha")
    pre = one / (v * (v * v - one))
    expected = {
        "1 1 2": vec({b: pre * v4, g: pre, dl: pre}),
        "2 1 1": vec({b: pre, g: pre * v4, dl: pre}),
        "1 2 1": vec({b: v / (v * v - one), g: v / (v * v - one), dl: v / (v * v - one)}),
    }
    for text, exp in expected.items():
        got = pbw_expand(expand_monomial(runs(2, text)))
        if got != exp:
            problems.append(f"pbw of E_{text.replace(' ', '')}: {got}")
    return not problems, "all identities hold" if not problems else "; ".join(problems)


def check_monomial_rank():
    count = bad = 0
    notes = []
    for n in (2, 3):
        for d in _dims(n, 5):
            elements = enumerate_pi(d)
            sep = separated_elements(d)
            rad = radical_basis(d)
            if len(sep) + len(rad) != len(elements):
                bad += 1
                notes.append(f"dim count {d}")
            sections = {"canonical": canonical_section(d), "random": random_section(d, seed=sum(d))}
            try:
                sections["distinguished"] = distinguished_section(d)
            except ValueError:
                pass
            for name, sec in sections.items():
                count += 1
                if transition_matrix(sec, d).block_rank() != len(sep):
                    bad += 1
                    notes.append(f"{name} {d}")
    return bad == 0, f"{count} section blocks, {bad} failures" + (": " + ", ".join(notes[:5]) if notes else "")


def check_oracles():
    from . import oracle as O

    bad = []
    homs = 0
    for n in (2, 3, 4):
        for i, j in product(range(1, n + 1), repeat=2):
            for l, m in product(range(1, 9), repeat=2):
                homs += 1
                A = O.rep_of(MultiPartition.from_summands(n, [(i, l)]), 2)
                B = O.rep_of(MultiPartition.from_summands(n, [(j, m)]), 2)
                if O.hom_dim(A, B) != hom_dim_ind(i, l, j, m, n):
                    bad.append(f"hom {(i, l, j, m, n)}")
    auts = steps = 0
    for n in (2, 3):
        for s in range(1, 5):
            for la in enumerate_pi_of_size(n, s):
                for p in (2, 3):
                    R = O.rep_of(la, p)
                    if s <= 3:
                        auts += 1
                        if O.count_automorphisms(R) != aut_poly(la)(p):
                            bad.append(f"aut {la} q={p}")
                    for i in range(1, n + 1):
                        steps += 2
                        if O.top_step_counts(R, i) != {mu: c(p) for mu, c in top_step(la, i)}:
                            bad.append(f"top {la} {i} q={p}")
                        if O.socle_step_counts(R, i) != {mu: c(p) for mu, c in socle_step(la, i)}:
                            bad.append(f"socle {la} {i} q={p}")
                        for a in (2, 3):
                            if O.top_step_counts(R, i, a) != {mu: c(p) for mu, c in isotypic_step(la, i, a)}:
                                bad.append(f"isotypic {la} {i}^{a} q={p}")
    detail = f"{homs} hom pairs, {auts} automorphism groups, {steps} step tables; {len(bad)} failures"
    return not bad, detail + (": " + ", ".join(bad[:5]) if bad else "")


def relation_pairs(n: int) -> list:
    """Pairs of words with equal generic extension, from the defining relations."""
    pairs = []
    if n >= 3:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if (j - i) % n not in (1, n - 1):
                    pairs.append(((i, j), (j, i)))
            k = i % n + 1
            pairs.append(((i, k, i), (i, i, k)))
            pairs.append(((k, i, k), (i, k, k)))
    else:
        pairs.append(((1, 2, 1, 1), (1, 1, 2, 1)))
        pairs.append(((2, 1, 2, 2), (2, 2, 1, 2)))
    return pairs


def _fold(letters, pi: MultiPartition) -> MultiPartition:
    for i in reversed(letters):
        pi = sigma_plus(i, pi)
    return pi


def check_monoid_relations():
    count = bad = 0
    for n in (2, 3, 4):
        affixes = list(_words(n, 3))
        for x, y in relation_pairs(n):
            for t in affixes:
                # wp folds from the right, so the suffix is shared
                base = wp(t)
                left, right = _fold(x, base), _fold(y, base)
                for u in affixes:
                    count += 1
                    if _fold(u.letters, left) != _fold(u.letters, right):
                        bad += 1
    return bad == 0, f"{count} wrapped relations, {bad} failures"


@dataclass
class Criterion:
    key: int
    name: str
    check: object
    quick: bool


CRITERIA = [
    Criterion(1, "sigma operator goldens", check_sigma_goldens, True),
    Criterion(2, "fiber census", check_fiber_census, True),
    Criterion(3, "distinguished census", check_distinguished_census, True),
    Criterion(4, "order coincidence", check_order_coincidence, False),
    Criterion(5, "bracket support and positivity", check_bracket_support, False),
    Criterion(6, "distinguished diagonal", check_distinguished_diagonal, False),
    Criterion(7, "degree (2,1) algebra for n=2", check_small_algebra, True),
    Criterion(8, "monomial basis rank", check_monomial_rank, False),
    Criterion(9, "finite-field oracles", check_oracles, False),
    Criterion(10, "monoid relations", check_monoid_relations, False),
]


@dataclass
class Result:
    key: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.key:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def run_one(c: Criterion) -> Result:
    t0 = time.perf_counter()
    passed, detail = c.check()
    return Result(c.key, c.name, bool(passed), detail, time.perf_counter() - t0)


def run(level: str = "full") -> list:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    return [run_one(c) for c in CRITERIA if level == "full" or c.quick]
