import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knarayana.euler import (EulerInput, a_coeffs, g_function, narayana_input, narayana_product_formula,
                             narayana_via_euler, numeric_roots, q_polynomial, random_euler_inputs,
                             root_residual, sigma_coeffs, transformed_coefficient,
                             verify_euler_identity)
from knarayana.hypergeom import HypergeometricSpec, coefficient
from knarayana.narayana import narayana_classic, sulanke_narayana
from knarayana.poly import DensePolynomial, RationalFunction


def test_sigma_examples():
    assert sigma_coeffs((3,), (1,)) == DensePolynomial([3, 1])
    f = Fraction(5, 2)
    assert sigma_coeffs((f,), (2,)) == DensePolynomial([f * (f + 1), 2 * f + 1, 1])
    assert sigma_coeffs((), ()) == DensePolynomial([1])


def test_a_coeff_examples():
    assert a_coeffs(DensePolynomial([3, 1])) == [3, 1]
    assert a_coeffs(DensePolynomial([1])) == [1]
    assert a_coeffs(sigma_coeffs((3,), (2,))) == [12, 8, 1]


def test_input_validation():
    with pytest.raises(ValueError):
        EulerInput(1, 2, 3, (1,), (0,))
    with pytest.raises(ValueError):
        EulerInput(1, 2, 3, (1, 2), (1,))
    with pytest.raises(ValueError):
        # (c-a-m)_m = (0)_1 = 0
        EulerInput(1, 2, 3, (1,), (1,))
    with pytest.raises(TypeError):
        EulerInput(0.5, 2, 3)


def test_g_function_examples():
    inp = EulerInput(5, 6, 2, (3,), (1,))
    assert g_function(1, inp) == RationalFunction(1)
    assert g_function(0, EulerInput(Fraction(1, 3), Fraction(2, 5), Fraction(7, 2))) == RationalFunction(1)
    t = DensePolynomial.x()
    assert g_function(0, inp) == RationalFunction(DensePolynomial([20, -10]), t * t - t * 9 + 20)
    with pytest.raises(ValueError):
        g_function(2, inp)


def test_g_function_two_terms():
    # l = m-1: 3F2(-1, l - t, 1-c-t; 1+b+l-c-t, 1+a+l-c-t; 1) = 1 - (l-t)(1-c-t)/((1+b+l-c-t)(1+a+l-c-t))
    a, b, c = Fraction(1, 3), Fraction(3, 4), Fraction(5, 2)
    inp = EulerInput(a, b, c, (Fraction(2, 7),), (2,))
    l = 1
    g = g_function(l, inp)
    for t in (Fraction(1, 9), Fraction(-2, 5), 3):
        expected = 1 - (l - t) * (1 - c - t) / ((1 + b + l - c - t) * (1 + a + l - c - t))
        assert g(t) == expected


def test_q_constant_for_classical_case():
    q = q_polynomial(EulerInput(Fraction(1, 3), Fraction(2, 5), Fraction(7, 2)))
    assert q.degree == 0 and q.poly(0) != 0
    assert numeric_roots(q) == []


def test_q_narayana_values():
    assert q_polynomial(narayana_input(3, 5)).poly == DensePolynomial([-105, 6, 1]) * -144
    assert q_polynomial(narayana_input(3, 4)).poly == DensePolynomial([60])
    assert q_polynomial(EulerInput(5, 6, 2, (3,), (1,))).poly == DensePolynomial([60])


def test_q_degree_k3_r5():
    assert q_polynomial(narayana_input(3, 5)).degree == 2


def test_transformed_coefficient_examples():
    inp = narayana_input(3, 5)
    assert transformed_coefficient(inp, 0) == 1
    assert transformed_coefficient(inp, 1) == 22 == sulanke_narayana(3, 4, 1)
    a, b, c = Fraction(1, 3), Fraction(-2, 5), Fraction(7, 2)
    classical = EulerInput(a, b, c)
    spec = HypergeometricSpec((c - a, c - b), (c,))
    assert all(transformed_coefficient(classical, j) == coefficient(spec, j) for j in range(10))


def test_verify_examples():
    assert verify_euler_identity(EulerInput(5, 6, 2, (3,), (1,)), 20)
    assert verify_euler_identity(narayana_input(4, 4), 15)
    rng = random.Random(7)
    for _ in range(5):
        inp = EulerInput(Fraction(rng.randint(-9, 9), 4), Fraction(rng.randint(-9, 9), 3),
                         Fraction(rng.randint(1, 9), 2))
        assert verify_euler_identity(inp, 20)


def test_product_formula_examples():
    assert [narayana_product_formula(2, 4, j) for j in range(3)] == [narayana_classic(3, j) for j in range(3)]
    assert [narayana_product_formula(3, 5, j) for j in range(7)] == [1, 22, 113, 190, 113, 22, 1]
    assert [narayana_product_formula(3, 4, j) for j in range(5)] == [sulanke_narayana(3, 3, j) for j in range(5)]


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("r", [4, 5, 6])
def test_product_formula_grid(k, r):
    for j in range((r - 2) * (k - 1) + 3):
        v = narayana_product_formula(k, r, j)
        assert v.denominator == 1
        assert v == sulanke_narayana(k, r - 1, j)


def test_via_euler_integral():
    assert [narayana_via_euler(3, 3, j) for j in range(5)] == [1, 10, 20, 10, 1]


def test_q_ratio_nonzero_on_support():
    for k in (3, 4):
        for r in (4, 5, 6):
            q = q_polynomial(narayana_input(k, r)).poly
            for j in range((r - 2) * (k - 1) + 1):
                assert q(-j) != 0


def test_numeric_roots():
    q = DensePolynomial([3, 2])
    assert numeric_roots(q) == [Fraction(-3, 2)]
    quad = q_polynomial(narayana_input(3, 5))
    roots = numeric_roots(quad)
    assert len(roots) == 2
    assert all(root_residual(quad, z) < 1e-12 for z in roots)
    assert abs(roots[1].real - (-3 + 114 ** 0.5)) < 1e-9


def test_random_inputs_deterministic():
    assert random_euler_inputs(5, seed=3) == random_euler_inputs(5, seed=3)
    assert all(inp.m_total <= 4 for inp in random_euler_inputs(25))


@given(st.integers(0, 10 ** 6))
def test_euler_identity_random(seed):
    inp = random_euler_inputs(1, seed=seed, max_m=3)[0]
    assert verify_euler_identity(inp, 12)
