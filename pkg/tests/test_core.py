from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from knarayana.core import as_rational, binomial, multiset, pochhammer, stirling2, to_int


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (-3, 2, 6), (4, 7, 0), (5, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rational_upper():
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


@pytest.mark.parametrize("a,b,expected", [(3, 2, 6), (1, 7, 1), (4, 0, 1)])
def test_multiset_examples(a, b, expected):
    assert multiset(a, b) == expected


def test_multiset_rejects_negative_size():
    with pytest.raises(ValueError):
        multiset(3, -1)


@pytest.mark.parametrize("a,k,expected", [(3, 4, 360), (-2, 3, 0), (Fraction(1, 2), 2, Fraction(3, 4)), (7, 0, 1)])
def test_pochhammer_examples(a, k, expected):
    assert pochhammer(a, k) == expected


@pytest.mark.parametrize("n,k,expected", [(3, 2, 3), (4, 2, 7), (5, 5, 1), (0, 0, 1), (4, 0, 0), (6, 3, 90)])
def test_stirling_examples(n, k, expected):
    assert stirling2(n, k) == expected


def test_float_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_to_int():
    assert to_int(Fraction(6, 3), "x") == 2
    with pytest.raises(ArithmeticError):
        to_int(Fraction(1, 2), "x")


@given(st.integers(-30, 30), st.integers(0, 25))
def test_pascal(n, k):
    assert binomial(n, k) + binomial(n, k + 1) == binomial(n + 1, k + 1)


@given(st.integers(0, 40), st.integers(-3, 45))
def test_binomial_matches_comb(n, k):
    assert binomial(n, k) == (comb(n, k) if k >= 0 else 0)


@given(st.integers(1, 20), st.integers(0, 15))
def test_negative_upper_reflection(n, k):
    assert binomial(-n, k) == (-1) ** k * binomial(n + k - 1, k)


@given(st.integers(-10, 10), st.integers(1, 7), st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(num, den, i, j):
    a = Fraction(num, den)
    assert pochhammer(a, i + j) == pochhammer(a, i) * pochhammer(a + i, j)


@given(st.integers(1, 12), st.integers(1, 12))
def test_stirling_surjection_count(n, k):
    surjections = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1))
    from math import factorial
    assert stirling2(n, k) * factorial(k) == surjections
