import json
from functools import reduce

import pytest
from hypothesis import given

from strategies import words
from qhall.basis import (
    HallVector,
    _words_of_content,
    canonical_section,
    distinguished_section,
    epsilon_word,
    expand_monomial,
    expected_diagonal,
    green_form_row,
    in_radical,
    monomial_rank,
    pbw_expand,
    radical_basis,
    radical_ideal_check,
    random_section,
    separated_elements,
    transition_matrix,
    twisted_left,
    twisted_right,
)
from qhall.core import MultiPartition, Word, compositions, enumerate_pi
from qhall.module_theory import euler
from qhall.poly import LaurentPoly, RatFunc

A = MultiPartition(2, ((2,), (1,)))
B = MultiPartition(2, ((2, 1), ()))
G = MultiPartition(2, ((1,), (1, 1)))
D = MultiPartition(2, ((1, 1, 1), ()))
V = LaurentPoly.monomial(1).to_ratfunc()


def vec(entries):
    return HallVector(2, (2, 1), {k: RatFunc.coerce(c) for k, c in entries.items()})


def test_radical_in_degree_two_one():
    rad = radical_basis((2, 1))
    assert rad == [vec({A: RatFunc(1) - V * V * V * V, B: 1, G: 1, D: 1})]
    assert in_radical(rad[0])


def test_pbw_expansions_in_degree_two_one():
    v4 = V * V * V * V
    inv = RatFunc(1) / (v4 - 1)
    assert pbw_expand(HallVector.basis_vector(A)) == vec({B: inv, G: inv, D: inv})
    pre = RatFunc(1) / (V * (V * V - 1))
    assert pbw_expand(expand_monomial(Word(2, (1, 1, 2)))) == vec({B: pre * v4, G: pre, D: pre})
    assert pbw_expand(expand_monomial(Word(2, (2, 1, 1)))) == vec({B: pre, G: pre * v4, D: pre})
    c = V / (V * V - 1)
    assert pbw_expand(expand_monomial(Word(2, (1, 2, 1)))) == vec({B: c, G: c, D: c})


def test_monomial_expansion_small():
    e = expand_monomial(Word(2, (1, 1, 2)))
    # v^eps * (1 + v^2) on beta and on alpha
    assert epsilon_word(Word(2, (1, 1, 2))) == -1
    assert e.coeff(B) == LaurentPoly(-1, (1, 0, 1))
    assert e.coeff(A) == LaurentPoly(-1, (1, 0, 1))
    assert e.coeff(D) == 0


@given(words(max_len=5))
def test_monomials_are_iterated_left_products(w):
    n = w.n
    one = HallVector(n, (0,) * n, {MultiPartition.empty(n): RatFunc(1)})
    built = reduce(lambda x, i: twisted_left(i, x), reversed(w.letters), one)
    assert built == expand_monomial(w).to_ratfunc()


@given(words(max_len=5))
def test_monomials_are_iterated_right_products(w):
    n = w.n
    one = HallVector(n, (0,) * n, {MultiPartition.empty(n): RatFunc(1)})
    built = reduce(lambda x, i: twisted_right(x, i), w.letters, one)
    assert built == expand_monomial(w).to_ratfunc()


def test_twist_uses_the_euler_form():
    x = HallVector.basis_vector(MultiPartition.from_summands(2, [(2, 1)]))
    y = twisted_left(1, x)
    assert euler((1, 0), (0, 1)) == -1
    assert y.coeff(MultiPartition.from_summands(2, [(1, 2)])) == LaurentPoly.monomial(-1).to_ratfunc()


@pytest.mark.parametrize("d", [(2, 1), (1, 2), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1)])
def test_every_word_row_annihilates_the_radical(d):
    elements = enumerate_pi(d)
    rad = radical_basis(d)
    assert len(rad) + len(separated_elements(d)) == len(elements)
    for w in _words_of_content(d):
        row = green_form_row(w, d)
        for y in rad:
            total = RatFunc(0)
            for pi, c in zip(elements, row):
                if pi in y.entries:
                    total = total + c * y.entries[pi]
            assert total.is_zero()


@pytest.mark.parametrize("d", [(2, 1), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1)])
def test_radical_is_a_two_sided_ideal(d):
    assert radical_ideal_check(d)


def test_pbw_fixes_separated_basis_vectors():
    for d in [(2, 1), (2, 2), (1, 1, 1)]:
        for pi in separated_elements(d):
            x = HallVector.basis_vector(pi)
            assert pbw_expand(x) == x.to_ratfunc()


@pytest.mark.parametrize("d", [(2, 1), (2, 2), (3, 1), (3, 2), (1, 1, 1), (2, 1, 1)])
def test_canonical_transition_matrix_is_triangular(d):
    m = transition_matrix(canonical_section(d), d)
    assert m.is_upper_triangular()
    assert m.block_rank() == len(m.rows)


@pytest.mark.parametrize("d", [(2, 1), (2, 2), (3, 2), (1, 1, 1), (2, 1, 1)])
def test_distinguished_diagonal_entries(d):
    m = transition_matrix(distinguished_section(d), d)
    assert m.is_upper_triangular()
    assert m.diagonal() == [expected_diagonal(w) for w in m.words]


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_sections_give_bases(seed):
    for d in [(2, 2), (3, 1), (2, 1, 1)]:
        sec = random_section(d, seed)
        assert transition_matrix(sec, d).block_rank() == len(sec)
        assert monomial_rank(sec, d) == len(sec)


def test_section_validation():
    with pytest.raises(ValueError):
        transition_matrix({B: Word(2, (2, 1, 1))})
    with pytest.raises(ValueError):
        transition_matrix({B: Word(2, (1, 1, 2))})  # missing classes


def test_json_outputs():
    m = transition_matrix(canonical_section((2, 1)), (2, 1))
    obj = json.loads(json.dumps(m.to_json()))
    assert len(obj["rows"]) == 3 and len(obj["cols"]) == 4
    assert obj["entries"][0][0] == {"var": "v", "lo": -1, "coeffs": [1]}
    x = json.loads(json.dumps(radical_basis((2, 1))[0].to_json()))
    assert x["d"] == [2, 1] and len(x["terms"]) == 4


def test_hall_vector_arithmetic():
    x = vec({A: 1, B: V})
    assert (x - x).is_zero()
    assert (x + x) == x.scale(2)
    assert -x == x.scale(-1)
    with pytest.raises(ValueError):
        HallVector(2, (1, 1), {A: RatFunc(1)})
