import pytest
from hypothesis import assume, given, strategies as st

from oracles import forward_fiber_count
from strategies import multipartitions, words
from qhall.core import MultiPartition, Word, content, dim_vector
from qhall.hall import reduced_filtration_count
from qhall.monoid import (
    FiberTooLarge,
    canonical_word,
    expand_tight,
    fiber,
    fiber_cap,
    fiber_size,
    in_image,
    is_distinguished,
    is_separated,
    predecessors,
    sigma_minus,
    sigma_plus,
    star,
    tight_form,
    wp,
)
from qhall.poly import Poly

PI = MultiPartition(3, ((4, 3, 3, 1, 1), (3, 2, 1), (2, 2)))


def test_sigma_plus_values():
    assert sigma_plus(1, PI) == MultiPartition(3, ((5, 4, 4, 2, 1), (2, 1), (2, 2)))
    assert sigma_plus(2, PI) == MultiPartition(3, ((4, 3, 3, 1, 1), (4, 3, 2), (1, 1)))
    assert sigma_plus(3, PI) == MultiPartition(3, ((3, 2, 2), (3, 2, 1), (3, 3, 1, 1, 1, 1)))


def test_sigma_minus_values():
    assert sigma_minus(1, PI) == MultiPartition(3, ((3, 2, 2), (4, 3, 2, 1), (2, 2)))
    assert sigma_minus(2, PI) == MultiPartition(3, ((4, 3, 3, 1, 1), (2, 1), (3, 3)))
    assert not in_image(3, PI)
    with pytest.raises(ValueError):
        sigma_minus(3, PI)


def test_sigma_minus_is_not_a_left_inverse():
    pi = MultiPartition(2, ((2, 1, 1), (1, 1)))
    assert sigma_minus(1, sigma_plus(1, pi)) == MultiPartition(2, ((2, 2, 2), ()))


@given(words())
def test_generic_extensions_are_separated(w):
    pi = wp(w)
    assert is_separated(pi)
    assert dim_vector(pi) == content(w)


@given(words(), st.integers(1, 4))
def test_sigma_minus_undoes_sigma_plus_on_separated_images(w, i):
    pi = wp(w)
    i = (i - 1) % pi.n + 1
    top = sigma_plus(i, pi)
    assert in_image(i, top)
    assert sigma_plus(i, sigma_minus(i, top)) == top


@given(words())
def test_canonical_word_lies_in_fiber(w):
    pi = wp(w)
    cw = canonical_word(pi)
    assert wp(cw) == pi
    assert content(cw) == content(w)


def test_canonical_word_rejects_non_separated():
    with pytest.raises(ValueError):
        canonical_word(MultiPartition(2, ((1,), (1,))))


def test_star_of_simples():
    assert star([1, 2, 1], 2) == MultiPartition(2, ((1, 1, 1), ()))
    assert star([], 2).is_empty()
    with pytest.raises(ValueError):
        star([MultiPartition(2, ((2,), ()))], 2)


@given(words(max_len=7))
def test_fiber_size_matches_forward_count(w):
    pi = wp(w)
    assert fiber_size(pi) == forward_fiber_count(pi)
    listed = fiber(pi)
    assert len(listed) == fiber_size(pi)
    assert listed == sorted(listed, key=lambda x: x.letters)
    assert w in listed and all(wp(x) == pi for x in listed)


def test_fiber_size_of_large_example_matches_forward_count():
    # the slow forward sweep over all words of content (8, 7, 7)
    assert fiber_size(PI) == forward_fiber_count(PI) == 18


def test_fiber_of_non_separated_class():
    pi = MultiPartition(2, ((1,), (1,)))
    assert fiber_size(pi) == 0
    with pytest.raises(ValueError):
        fiber(pi)


def test_fiber_cap_from_environment(monkeypatch):
    small = MultiPartition(3, ((3, 2, 1), (1, 1), (1,)))
    monkeypatch.setenv("QHALL_FIBER_CAP", "5")
    assert fiber_cap() == 5
    with pytest.raises(FiberTooLarge):
        fiber(small)
    assert len(fiber(small, cap=7)) == 7
    monkeypatch.setenv("QHALL_FIBER_CAP", "zero")
    with pytest.raises(ValueError):
        fiber_cap()


def test_predecessors_map_forward():
    for i, mu in predecessors(PI):
        assert sigma_plus(i, mu) == PI


def test_tight_form():
    w = Word(3, (1, 2, 2, 1, 1, 3))
    assert tight_form(w) == ((1, 1), (2, 2), (1, 2), (3, 1))
    assert expand_tight(3, tight_form(w)) == w
    assert tight_form(Word(2, ())) == ()


@given(words(max_len=6))
def test_distinguished_means_unique_reduced_filtration(w):
    assert is_distinguished(w) == (reduced_filtration_count(w, wp(w)) == Poly.one())


def test_distinguished_words_of_small_fiber():
    pi = MultiPartition(3, ((3, 2, 1), (1, 1), (1,)))
    marks = {str(w): is_distinguished(w) for w in fiber(pi)}
    assert sum(marks.values()) == 5
    assert not marks["211213332"] and not marks["211132332"]
