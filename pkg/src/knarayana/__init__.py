"""Exact k-Narayana numbers, hypergeometric Euler transforms and Grassmannian Hilbert data."""

from .core import binomial, multiset, pochhammer, stirling2
from .euler import (EulerInput, narayana_input, narayana_product_formula, narayana_via_euler,
                    q_polynomial, transformed_coefficient, verify_euler_identity)
from .grassmann import (GrassmannianId, SchubertIndex, h_polynomial, hilbert_polynomial,
                        hilbert_series_coeffs, schubert_degree, schubert_h_vector)
from .hypergeom import HypergeometricSpec, coefficients, narayana_series_spec
from .linalg import RationalMatrix, determinant
from .narayana import (curly_bracket, multiset_narayana, multiset_series, narayana_polynomial,
                       round_bracket, simple_narayana_product, square_bracket,
                       sulanke_narayana)
from .paths import BudgetExceeded, count_narayana_paths, count_sulanke_paths
from .poly import DensePolynomial, RationalFunction, interpolate
from .series import TruncatedSeries

__version__ = "0.1.0"
