"""
Hypergeometric coefficient streams
==================================

A pFq is handled as its exact coefficient sequence. The multiset
k-Narayana series is kF(k-1)(r, ..., r+k-1; 2, ..., k; t).
"""

from fractions import Fraction

from knarayana.hypergeom import (HypergeometricSpec, coefficients, narayana_series_spec, reduce,
                                 simple_polynomial_spec)
from knarayana.narayana import multiset_narayana, simple_narayana_product

s = HypergeometricSpec((1, 1), (2,))
print(s, "->", [str(c) for c in coefficients(s, 6)])

s = narayana_series_spec(3, 5)
print(s, "->", coefficients(s, 5).as_ints())
print("multiset numbers:", [multiset_narayana(3, 5, j) for j in range(6)])

s = simple_polynomial_spec(2, 4)
print(s, "->", coefficients(s, 5).as_ints(), "terminates at", s.termination_degree())
print("simple numbers:", [simple_narayana_product(2, 4, j) for j in range(6)])

# cancelling shared parameters leaves the stream unchanged
s = narayana_series_spec(5, 3)
print(s, "reduces to", reduce(s))
print(coefficients(s, 8) == coefficients(reduce(s), 8))

s = HypergeometricSpec((Fraction(1, 2), Fraction(-7, 3)), (Fraction(4, 5),), Fraction(-1, 2))
print(s, "->", [str(c) for c in coefficients(s, 4)])
