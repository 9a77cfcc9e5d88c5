"""
Exact arithmetic building blocks
================================

Everything in the package is an int or a Fraction. This script shows the
scalar helpers, polynomials, truncated series and the fraction-free
determinant that the rest is built on.
"""

from fractions import Fraction

from knarayana.core import binomial, multiset, pochhammer, stirling2
from knarayana.linalg import determinant
from knarayana.poly import DensePolynomial, interpolate
from knarayana.series import TruncatedSeries, series_scale_binomial_power

# binomials accept negative and rational upper arguments
print("C(5,2) =", binomial(5, 2))
print("C(-3,2) =", binomial(-3, 2))
print("C(1/2,3) =", binomial(Fraction(1, 2), 3))
print("multiset(3,2) =", multiset(3, 2))
print("(1/2)_2 =", pochhammer(Fraction(1, 2), 2))
print("S(4,2) =", stirling2(4, 2))

# a 2x2 binomial determinant, computed without leaving the integers
rows = [[binomial(2, 1), binomial(2, 2)], [binomial(2, 0), binomial(2, 1)]]
print("det", rows, "=", determinant(rows))

# interpolation recovers C(j+2, 2) as a polynomial in j
p = interpolate([(j, binomial(j + 2, 2)) for j in range(3)])
print("interpolated:", p.pretty("j"))

# (1-t)^(-1) turns 1 into the geometric series; (1-t)^5 undoes a Hilbert series
print(series_scale_binomial_power(TruncatedSeries([1, 0, 0, 0, 0]), -1).as_ints())
print(series_scale_binomial_power(TruncatedSeries([1, 6, 20, 50, 105]), 5).as_ints())

x = DensePolynomial.x()
print("(x+1)^3 =", ((x + 1) ** 3).pretty("x"))
