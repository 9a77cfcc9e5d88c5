"""Polynomials, rational functions, truncated series and determinants."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from knarayana.core import binomial
from knarayana.linalg import RationalMatrix, determinant
from knarayana.poly import DensePolynomial, RationalFunction, interpolate, poly_gcd, rising_poly
from knarayana.series import TruncatedSeries, series_mul, series_scale_binomial_power

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
polys = st.lists(rationals, min_size=0, max_size=6).map(DensePolynomial)


def leibniz(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction((-1) ** inv)
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


# -- polynomials

def test_trailing_zeros_trimmed():
    p = DensePolynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert DensePolynomial([0, 0]).degree == -1


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == DensePolynomial()


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_division(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys, rationals)
def test_evaluation_is_ring_map(p, x):
    q = p * p + DensePolynomial.linear(3)
    assert q(x) == p(x) ** 2 + 3 + x


def test_gcd():
    p = DensePolynomial.linear(-1) * DensePolynomial.linear(2)
    q = DensePolynomial.linear(-1) * DensePolynomial.linear(5)
    assert poly_gcd(p, q) == DensePolynomial.linear(-1)


def test_rising_poly():
    x = DensePolynomial.x()
    assert rising_poly(x, 3) == x * (x + 1) * (x + 2)
    assert rising_poly(x, 0) == DensePolynomial.constant(1)


def test_palindromic():
    assert DensePolynomial([1, 3, 1]).is_palindromic()
    assert not DensePolynomial([1, 3, 2]).is_palindromic()


def test_rational_function_normalizes():
    x = DensePolynomial.x()
    f = RationalFunction((x - 1) * (x + 2) * 4, (x - 1) * 2)
    assert f.is_polynomial()
    assert f.num == (x + 2) * 2
    assert f.den == DensePolynomial.constant(1)


@given(polys, polys.filter(lambda q: not q.is_zero()), rationals)
def test_rational_function_evaluation(p, q, x):
    if q(x) == 0:
        return
    f = RationalFunction(p, q)
    assert f(x) == p(x) / q(x)
    assert (f + f)(x) == 2 * p(x) / q(x)


# -- interpolation

def test_interpolate_examples():
    assert interpolate([(0, 0), (1, 1), (2, 4)]) == DensePolynomial([0, 0, 1])
    assert interpolate([(0, 7)]) == DensePolynomial([7])
    expected = DensePolynomial.linear(1) * DensePolynomial.linear(2) * Fraction(1, 2)
    assert interpolate([(j, binomial(j + 2, 2)) for j in range(3)]) == expected


def test_interpolate_duplicate_abscissa():
    with pytest.raises(ValueError):
        interpolate([(1, 2), (1, 3)])


@given(polys)
def test_interpolation_round_trip(p):
    pts = [(x, p(x)) for x in range(max(p.degree, 0) + 1)]
    assert interpolate(pts) == p


# -- series

def test_series_examples():
    assert list(series_scale_binomial_power(TruncatedSeries([1, 0, 0, 0]), -1)) == [1, 1, 1, 1]
    assert list(series_scale_binomial_power(TruncatedSeries([1, 1, 0]), 1)) == [1, 0, -1]
    assert list(series_scale_binomial_power(TruncatedSeries([1, 6]), 5)) == [1, 1]


def test_series_order_mismatch():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2]) + TruncatedSeries([1, 2, 3])


@given(st.lists(rationals, min_size=1, max_size=10), st.integers(-6, 6) | rationals)
def test_binomial_power_inverse(coeffs, p):
    s = TruncatedSeries(coeffs)
    assert series_scale_binomial_power(series_scale_binomial_power(s, p), -p) == s


@given(st.lists(rationals, min_size=1, max_size=8), st.lists(rationals, min_size=1, max_size=8))
def test_series_mul_commutes(a, b):
    n = min(len(a), len(b))
    s, u = TruncatedSeries(a[:n]), TruncatedSeries(b[:n])
    assert series_mul(s, u) == series_mul(u, s)


# -- determinants

def test_determinant_examples():
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[binomial(2, 1), binomial(2, 2)], [binomial(2, 0), binomial(2, 1)]]) == 3
    assert determinant(RationalMatrix.from_rows([[2]])) == 2


def test_determinant_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_needs_pivoting():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0], [1, 2]]) == 0


@given(st.integers(1, 5), st.integers(0, 10 ** 6))
def test_determinant_matches_leibniz(n, seed):
    rng = random.Random(seed)
    rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
    if rng.random() < 0.3:
        rows[-1] = list(rows[0])
    assert determinant(rows) == leibniz(rows)
