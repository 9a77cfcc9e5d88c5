from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knarayana.hypergeom import (HypergeometricSpec, coefficient, coefficients, narayana_series_spec,
                                 reduce, same_parameters, simple_polynomial_spec, termination_degree)
from knarayana.narayana import multiset_narayana, simple_narayana_product


def test_coefficient_examples():
    s = HypergeometricSpec((1, 1), (2,))
    assert [coefficient(s, j) for j in range(6)] == [Fraction(1, j + 1) for j in range(6)]
    assert coefficient(HypergeometricSpec((Fraction(7, 3), 4), (Fraction(1, 2),)), 0) == 1
    assert coefficient(HypergeometricSpec((-2, 1), (1,)), 3) == 0


def test_termination_examples():
    assert termination_degree(HypergeometricSpec((3, -4), (1,))) == 4
    assert termination_degree(HypergeometricSpec((5, 6), ())) is None
    assert termination_degree(HypergeometricSpec((0, 2), (3,))) == 0


def test_lower_nonpositive_needs_earlier_termination():
    HypergeometricSpec((-2, 1), (-5,))
    with pytest.raises(ValueError):
        HypergeometricSpec((1, 1), (-2,))
    with pytest.raises(ValueError):
        HypergeometricSpec((-3, 1), (-2,))


def test_reduce_examples():
    s = reduce(HypergeometricSpec((4, 5, 3), (2, 3)))
    assert same_parameters(s, HypergeometricSpec((4, 5), (2,)))
    u = HypergeometricSpec((4, 5), (2,))
    assert reduce(u) == u


def test_reduce_counts_multiplicity():
    s = reduce(HypergeometricSpec((3, 3, 2), (3, 4)))
    assert same_parameters(s, HypergeometricSpec((3, 2), (4,)))


def test_narayana_specs():
    assert coefficient(narayana_series_spec(2, 3), 2) == 20
    assert coefficient(narayana_series_spec(3, 5), 1) == 35


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("r", range(1, 7))
def test_series_spec_grid(k, r):
    assert list(coefficients(narayana_series_spec(k, r), 10)) == [multiset_narayana(k, r, j) for j in range(11)]
    simple = simple_polynomial_spec(k, r)
    assert [coefficient(simple, j) for j in range(11)] == [simple_narayana_product(k, r, j) for j in range(11)]


rat = st.fractions(min_value=-6, max_value=6, max_denominator=5)
pos = st.fractions(min_value=Fraction(1, 5), max_value=6, max_denominator=5)


@given(st.lists(rat, max_size=3), st.lists(pos, max_size=3), st.integers(0, 3), st.data())
def test_reduce_preserves_stream(upper, lower, shared, data):
    common = [data.draw(pos) for _ in range(shared)]
    s = HypergeometricSpec(tuple(upper + common), tuple(common + lower))
    assert coefficients(reduce(s), 15) == coefficients(s, 15)


@given(st.lists(rat, max_size=3), st.lists(pos, max_size=3), st.integers(0, 12))
def test_stream_matches_pochhammer_formula(upper, lower, j):
    s = HypergeometricSpec(tuple(upper), tuple(lower), Fraction(-1, 2))
    assert coefficients(s, j)[j] == coefficient(s, j)
