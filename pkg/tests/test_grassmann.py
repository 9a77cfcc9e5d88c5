from math import comb

import pytest

from knarayana.core import multiset
from knarayana.grassmann import (GrassmannianId, SchubertIndex, all_schubert_indices, degree,
                                 h_polynomial, hilbert_polynomial, hilbert_series_coeffs,
                                 hodge_littlewood, schubert_dimension, schubert_h_vector,
                                 schubert_hilbert_value, sulanke_from_curly)
from knarayana.narayana import multiset_narayana, sulanke_narayana
from knarayana.poly import DensePolynomial


def test_validation():
    with pytest.raises(ValueError):
        GrassmannianId(3, 2)
    with pytest.raises(ValueError):
        SchubertIndex((2, 2), 4)
    with pytest.raises(ValueError):
        SchubertIndex((1, 5), 4)


def test_hilbert_series_examples():
    assert list(hilbert_series_coeffs(GrassmannianId(2, 4), 3)) == [1, 6, 20, 50]
    assert list(hilbert_series_coeffs(GrassmannianId(3, 3), 6)) == [1] * 7
    assert list(hilbert_series_coeffs(GrassmannianId(1, 5), 6)) == [multiset(5, j) for j in range(7)]


def test_quadric_formula():
    s = hilbert_series_coeffs(GrassmannianId(2, 4), 10)
    assert list(s) == [comb(j + 5, 5) - comb(j + 3, 5) for j in range(11)]


def test_invariant_grading():
    s = hilbert_series_coeffs(GrassmannianId(2, 4), 6, invariant_grading=True)
    assert list(s) == [1, 0, 6, 0, 20, 0, 50]


def test_hilbert_polynomial_examples():
    p = hilbert_polynomial(GrassmannianId(2, 4))
    assert p(1) == 6 and p(2) == 20 and p.degree == 4
    for n in range(1, 6):
        q = hilbert_polynomial(GrassmannianId(1, n))
        assert all(q(j) == multiset(n, j) for j in range(8))


@pytest.mark.parametrize("k,n", [(k, n) for n in range(1, 9) for k in range(1, min(n, 4) + 1)])
def test_hodge_littlewood_shifted(k, n):
    p = hilbert_polynomial(GrassmannianId(k, n))
    for j in range(11):
        assert p(j) == hodge_littlewood(k - 1, n - 1, j) == multiset_narayana(k, n - k + 1, j)


def test_h_polynomial_examples():
    assert h_polynomial(GrassmannianId(2, 4)) == DensePolynomial([1, 1])
    assert h_polynomial(GrassmannianId(2, 5)) == DensePolynomial([1, 3, 1])
    for k in range(1, 5):
        assert h_polynomial(GrassmannianId(k, k + 1)) == DensePolynomial([1])


def test_schubert_examples():
    assert schubert_dimension(SchubertIndex((3, 4), 4)) == (4, 5)
    assert schubert_dimension(SchubertIndex.point(3, 5)) == (0, 1)
    assert schubert_dimension(SchubertIndex((2, 4), 4)) == (3, 4)
    assert schubert_hilbert_value(SchubertIndex((3, 4), 4), 1) == 6
    assert schubert_h_vector(SchubertIndex((3, 4), 4)) == [1, 1]
    assert schubert_h_vector(SchubertIndex((4, 5), 5)) == [1, 3, 1]
    assert schubert_h_vector(SchubertIndex.point(2, 4)) == [1]
    assert degree(SchubertIndex((3, 4), 4)) == 2
    assert degree(SchubertIndex((4, 5), 5)) == 5
    assert degree(SchubertIndex.point(3)) == 1


def test_point_hilbert_function():
    s = SchubertIndex.point(3, 6)
    assert [schubert_hilbert_value(s, j) for j in range(5)] == [1] * 5


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_full_index_is_grassmannian(k, n):
    s = SchubertIndex.full(k, n)
    assert [schubert_hilbert_value(s, j) for j in range(6)] == [multiset_narayana(k, n - k + 1, j) for j in range(6)]
    assert schubert_h_vector(s) == list(h_polynomial(GrassmannianId(k, n)))


@pytest.mark.parametrize("n", range(2, 7))
def test_schubert_indices_of_gr2(n):
    for s in all_schubert_indices(2, n):
        h = schubert_h_vector(s)
        assert all(x >= 0 for x in h)
        assert sum(h) == degree(s)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 5), (3, 7)])
def test_sulanke_from_curly(k, n):
    assert [sulanke_from_curly(k, n, i) for i in range(8)] == [sulanke_narayana(k, n - k, i) for i in range(8)]
