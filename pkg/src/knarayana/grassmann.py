"""
Hilbert series, Hilbert polynomials and h-vectors of Grassmannians Gr(k, n)
and of their Schubert varieties X(a_1, ..., a_k), all in the Pluecker
grading.

Conventions: ``projective_dim`` is the dimension of the projective variety,
``cone_dim`` = projective_dim + 1 is the Krull dimension of the coordinate
ring, and the h-polynomial is the numerator of the Hilbert series over
(1 - t)^cone_dim.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .core import binomial
from .narayana import curly_bracket, multiset_narayana, narayana_polynomial
from .poly import interpolate
from .series import TruncatedSeries, series_scale_binomial_power

EXTRA_CHECKS = 3


@dataclass(frozen=True)
class GrassmannianId:
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n, got Gr(%d,%d)" % (self.k, self.n))

    @property
    def dim(self):
        return self.k * (self.n - self.k)


@dataclass(frozen=True)
class SchubertIndex:
    a: tuple
    n: int

    def __post_init__(self):
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise ValueError("empty Schubert index")
        if a[0] < 1 or a[-1] > self.n or any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
            raise ValueError("need 1 <= a_1 < ... < a_k <= n, got %r in n=%d" % (a, self.n))

    @property
    def k(self):
        return len(self.a)

    @classmethod
    def full(cls, k, n):
        "The index (n-k+1, ..., n) of Gr(k, n) itself."
        return cls(tuple(range(n - k + 1, n + 1)), n)

    @classmethod
    def point(cls, k, n=None):
        return cls(tuple(range(1, k + 1)), n if n is not None else k)


def _gr(g):
    return g if isinstance(g, GrassmannianId) else GrassmannianId(*g)


def _schubert(s):
    if isinstance(s, SchubertIndex):
        return s
    a = tuple(s)
    return SchubertIndex(a, a[-1])


def all_schubert_indices(k, n):
    "Every strictly increasing index of Gr(k, n), lexicographically."
    return [SchubertIndex(a, n) for a in combinations(range(1, n + 1), k)]


def polynomial_from_values(f, degree):
    """
    Interpolate j -> f(j) at j = 0..degree+2 and confirm the result at a
    few further points.
    """
    npts = max(degree, 0) + 3
    p = interpolate([(j, f(j)) for j in range(npts)])
    for j in range(npts, npts + EXTRA_CHECKS):
        if p(j) != f(j):
            raise AssertionError("values are not polynomial of degree %d at j=%d" % (degree, j))
    return p


def hilbert_series_coeffs(g, J, invariant_grading=False):
    """
    dim R_j for j = 0..J. With ``invariant_grading`` the same numbers sit at
    t^(k j), the grading of the SL_k-invariant ring of k x n matrices.
    """
    g = _gr(g)
    r = g.n - g.k + 1
    if not invariant_grading:
        return TruncatedSeries([multiset_narayana(g.k, r, j) for j in range(J + 1)])
    out = [0] * (J + 1)
    for l in range(J // g.k + 1):
        out[g.k * l] = multiset_narayana(g.k, r, l)
    return TruncatedSeries(out)


def hodge_littlewood(k, n, j):
    """
    (n+j)!...(n+j-k)! / (j!...(k+j)!) * 1!...k! / ((n-k)!...n!).

    In this parametrization Gr(k, n) enters as (k-1, n-1).
    """
    num = den = 1
    for i in range(k + 1):
        num *= factorial(n + j - i) * factorial(i)
        den *= factorial(j + i) * factorial(n - i)
    return Fraction(num, den)


def hilbert_polynomial(g):
    """
    Hilbert polynomial of Gr(k, n) as a polynomial in j, obtained both from
    the Hodge-Littlewood product and from the multiset Narayana numbers.
    """
    g = _gr(g)
    k, n = g.k, g.n
    p1 = polynomial_from_values(lambda j: hodge_littlewood(k - 1, n - 1, j), g.dim)
    p2 = polynomial_from_values(lambda j: multiset_narayana(k, n - k + 1, j), g.dim)
    if p1 != p2:
        raise AssertionError("Hodge-Littlewood and Narayana Hilbert polynomials differ for %r" % (g,))
    if p1.degree != g.dim:
        raise AssertionError("Hilbert polynomial of %r has degree %d" % (g, p1.degree))
    return p1


def h_polynomial(g):
    "The k-Narayana polynomial N_{k, n-k}, checked against the Hilbert series."
    g = _gr(g)
    h = narayana_polynomial(g.k, g.n - g.k)
    J = g.dim + 1 + max(h.degree, 0) + 2
    series = series_scale_binomial_power(hilbert_series_coeffs(g, J), g.dim + 1)
    if list(series) != [h[i] for i in range(J + 1)]:
        raise AssertionError("h-polynomial of %r does not match its Hilbert series" % (g,))
    return h


def schubert_hilbert_value(s, j):
    "dim of the degree-j piece of the coordinate ring of X(a)."
    s = _schubert(s)
    return curly_bracket(s.a, j)


def schubert_dimension(s):
    "(projective_dim, cone_dim), the first being sum(a_i - i)."
    s = _schubert(s)
    d = sum(x - i for i, x in enumerate(s.a, start=1))
    p = schubert_hilbert_polynomial(s)
    if p.degree != d:
        raise AssertionError("Hilbert polynomial of %r has degree %d, expected %d"
                             % (s.a, p.degree, d))
    return d, d + 1


def schubert_hilbert_polynomial(s):
    s = _schubert(s)
    d = sum(x - i for i, x in enumerate(s.a, start=1))
    return polynomial_from_values(lambda j: curly_bracket(s.a, j), d)


def h_vector_from_values(values, D, upto):
    "h_i = sum_l (-1)^l values(i-l) C(D, l)."
    return [sum((-1) ** l * values(i - l) * binomial(D, l) for l in range(i + 1))
            for i in range(upto + 1)]


def h_vector_two_sum(values, D, upto):
    "The same h_i written as a difference of two sums with C(D-1, l)."
    out = []
    for i in range(upto + 1):
        first = sum((-1) ** l * values(i - l) * binomial(D - 1, l) for l in range(i + 1))
        second = sum((-1) ** l * values(i - l - 1) * binomial(D - 1, l) for l in range(i))
        out.append(first - second)
    return out


def _trim(xs):
    xs = list(xs)
    while len(xs) > 1 and xs[-1] == 0:
        xs.pop()
    return xs


def schubert_h_vector(s):
    """
    h-vector of X(a); the alternating sum uses D = cone_dim. The two-sum
    form is evaluated as well and must agree.
    """
    s = _schubert(s)
    d, D = schubert_dimension(s)
    vals = lambda j: curly_bracket(s.a, j)
    h = h_vector_from_values(vals, D, d + 1)
    h2 = h_vector_two_sum(vals, D, d + 1)
    if h != h2:
        raise AssertionError("h-vector forms disagree for %r: %r vs %r" % (s.a, h, h2))
    return _trim(h)


def schubert_degree(s):
    "projective_dim! times the leading Hilbert coefficient; equals sum(h)."
    s = _schubert(s)
    d, _ = schubert_dimension(s)
    p = schubert_hilbert_polynomial(s)
    deg = p.lead * factorial(d)
    total = sum(schubert_h_vector(s))
    if deg != total:
        raise AssertionError("degree %s != sum of h-vector %s for %r" % (deg, total, s.a))
    return int(deg)


degree = schubert_degree


def sulanke_from_curly(k, n, i):
    """
    sum_l (-1)^l {n,...,n}_{i-l} C(k(n-k)+1, l), the repeated-index case of
    the Schubert h-vector formula.
    """
    a = (n,) * k
    return sum((-1) ** l * curly_bracket(a, i - l) * binomial(k * (n - k) + 1, l)
               for l in range(i + 1))


def h_polynomial_as_series_ratio(g):
    "(numerator h-polynomial, exponent of (1 - t)) for display."
    g = _gr(g)
    return h_polynomial(g), g.dim + 1

