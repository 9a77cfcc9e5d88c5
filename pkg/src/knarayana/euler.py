"""
Generalized hypergeometric Euler transform and the product formula for
k-Narayana numbers.

For parameters a, b, c and pairs (f_i, m_i) with m = sum m_i,

    (r+2)F(r+1)(a, b, f_1+m_1, ..; c, f_1, ..; t)
        = (1-t)^(c-a-b-m) (m+2)F(m+1)(c-a-m, c-b-m, eta_1+1, ..; c, eta_1, ..; t)

where the eta_i are the zeros of a polynomial Q(t) assembled from
Stirling-weighted coefficients A_l and terminating 3F2 sums G_l at unit
argument. Since Q(t) = lead * prod(t - eta_i),

    prod_i (eta_i + j) / eta_i = Q(-j) / Q(0),

so right-hand coefficients are evaluated exactly without ever extracting a
root. Roots are only approximated for display (``numeric_roots``).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Optional

import numpy as np

from .core import as_rational, pochhammer, stirling2, to_int
from .hypergeom import HypergeometricSpec, coefficients
from .poly import DensePolynomial, RationalFunction, rising_poly
from .series import TruncatedSeries, series_scale_binomial_power


@dataclass(frozen=True)
class EulerInput:
    a: Fraction
    b: Fraction
    c: Fraction
    f: tuple = ()
    m: tuple = ()

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        object.__setattr__(self, "f", tuple(as_rational(x) for x in self.f))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.f) != len(self.m):
            raise ValueError("f and m must have the same length")
        if any(mi < 1 for mi in self.m):
            raise ValueError("every m_i must be >= 1")
        M = self.m_total
        a, b, c = self.a, self.b, self.c
        for label, value in (("(c-a-m)_m", pochhammer(c - a - M, M)),
                             ("(c-b-m)_m", pochhammer(c - b - M, M)),
                             ("(1+a+b-c)_m", pochhammer(1 + a + b - c, M))):
            if value == 0:
                raise ValueError("Euler transform requires %s != 0 for %r" % (label, self))

    @property
    def m_total(self):
        return sum(self.m)

    def left_spec(self):
        "The series being transformed."
        upper = (self.a, self.b) + tuple(fi + mi for fi, mi in zip(self.f, self.m))
        return HypergeometricSpec(upper, (self.c,) + self.f)

    @property
    def exponent(self):
        "The power of (1 - t) in front of the transformed series."
        return self.c - self.a - self.b - self.m_total


@dataclass(frozen=True)
class QPolynomial:
    poly: DensePolynomial
    input: EulerInput

    @property
    def degree(self):
        return self.poly.degree

    @property
    def vanishes_at_zero(self):
        return self.poly(0) == 0


def narayana_input(k, r):
    """
    Parameters that turn the multiset Narayana series into Euler form:
    c = 2, a = r+k-2, b = r+k-1 and (f_i, m_i) = (i, r-3) for i = 3..k.
    """
    if k < 2:
        raise ValueError("the Euler route needs k >= 2")
    if k >= 3 and r < 4:
        raise ValueError("k >= 3 needs r >= 4 so that m_i = r-3 >= 1")
    f = tuple(range(3, k + 1))
    return EulerInput(r + k - 2, r + k - 1, 2, f, (r - 3,) * len(f))


def sigma_coeffs(f, m):
    "Expansion of (f_1+x)_{m_1} ... (f_r+x)_{m_r} in x."
    p = DensePolynomial.constant(1)
    for fi, mi in zip(f, m):
        if mi < 1:
            raise ValueError("every m_i must be >= 1")
        p = p * rising_poly(DensePolynomial.linear(fi), mi)
    return p


def a_coeffs(sigma):
    "A_l = sum_{j >= l} S(j, l) sigma_j for l = 0..deg."
    n = sigma.degree
    return [sum((stirling2(j, l) * sigma[j] for j in range(l, n + 1)), Fraction(0))
            for l in range(n + 1)]


def _terminating_3f2(l, inp, sign):
    """
    3F2(l-m, l - s t, 1-c - s t; 1+b+l-c - s t, 1+a+l-c - s t; 1) for s = sign,
    summed over one common denominator.
    """
    M = inp.m_total
    a, b, c = inp.a, inp.b, inp.c
    T = DensePolynomial.linear(0, -sign)  # -s t
    n = M - l
    lo_b = T + (1 + b + l - c)
    lo_a = T + (1 + a + l - c)
    num = DensePolynomial()
    for i in range(n + 1):
        term = rising_poly(T + l, i) * rising_poly(T + (1 - c), i)
        term = term * rising_poly(lo_b + i, n - i) * rising_poly(lo_a + i, n - i)
        num = num + term * Fraction(pochhammer(l - M, i), factorial(i))
    den = rising_poly(lo_b, n) * rising_poly(lo_a, n)
    return RationalFunction(num, den)


def g_function(l, inp):
    "G_l(t) as a normalized rational function of t."
    if not 0 <= l <= inp.m_total:
        raise ValueError("need 0 <= l <= m_total")
    return _terminating_3f2(l, inp, 1)


@lru_cache(maxsize=256)
def q_polynomial(inp):
    """
    Q(t) = sum_l (-1)^l A_l (a)_l (b)_l (t)_l (c-a-m-t)_{m-l} (c-b-m-t)_{m-l} G_l(-t).

    Raises ArithmeticError if the sum is not a polynomial.
    """
    M = inp.m_total
    a, b, c = inp.a, inp.b, inp.c
    A = a_coeffs(sigma_coeffs(inp.f, inp.m))
    t = DensePolynomial.x()
    total = RationalFunction(0)
    for l in range(M + 1):
        if A[l] == 0:
            continue
        scalar = (-1) ** l * A[l] * pochhammer(a, l) * pochhammer(b, l)
        poly = (rising_poly(t, l)
                * rising_poly(-t + (c - a - M), M - l)
                * rising_poly(-t + (c - b - M), M - l))
        total = total + RationalFunction(poly * scalar) * _terminating_3f2(l, inp, -1)
    if not total.is_polynomial():
        raise ArithmeticError("nonpolynomial remainder in Q(t) for %r: %r" % (inp, total))
    q = total.num * (1 / total.den.lead)
    if q.degree > M:
        raise ArithmeticError("Q(t) has degree %d > m = %d" % (q.degree, M))
    return QPolynomial(q, inp)


def transformed_coefficient(inp, j):
    """
    Coefficient of t^j in (m+2)F(m+1)(c-a-m, c-b-m, eta+1; c, eta; t), i.e.

        (c-a-m)_j (c-b-m)_j / ((c)_j j!) * Q(-j) / Q(0).
    """
    q = q_polynomial(inp).poly
    q0 = q(0)
    if q0 == 0:
        raise ZeroDivisionError("Q(0) = 0: the transform needs nonvanishing zeros (%r)" % (inp,))
    M = inp.m_total
    num = pochhammer(inp.c - inp.a - M, j) * pochhammer(inp.c - inp.b - M, j)
    den = pochhammer(inp.c, j) * factorial(j)
    return num / den * Fraction(q(-j)) / q0


def transformed_series(inp, J):
    return TruncatedSeries([transformed_coefficient(inp, j) for j in range(J + 1)])


class EulerCheck(NamedTuple):
    ok: bool
    first_mismatch: Optional[int] = None

    def __bool__(self):
        return self.ok


def verify_euler_identity(inp, J):
    "Compare both sides of the transform coefficientwise up to t^J."
    left = coefficients(inp.left_spec(), J)
    right = series_scale_binomial_power(transformed_series(inp, J), inp.exponent)
    for j, (x, y) in enumerate(zip(left, right)):
        if x != y:
            return EulerCheck(False, j)
    return EulerCheck(True)


def narayana_product_formula(k, r, j):
    """
    N_k(r-1, j) from the Euler transform of the multiset Narayana series
    with parameter r.
    """
    return transformed_coefficient(narayana_input(k, r), j)


def narayana_via_euler(k, r, j):
    "N_k(r, j) through the Euler route; the input parameter is r+1."
    return to_int(narayana_product_formula(k, r + 1, j), "Euler N_%d(%d,%d)" % (k, r, j))


def numeric_roots(q):
    """
    Approximate zeros of Q for display. Degree 1 is solved exactly and
    returned as a Fraction; higher degrees go through numpy and one Newton
    polish per root.
    """
    poly = q.poly if isinstance(q, QPolynomial) else q
    if poly.degree < 1:
        return []
    if poly.degree == 1:
        return [-poly[0] / poly[1]]
    scale = max(abs(c) for c in poly)
    cs = [float(c / scale) for c in poly]
    roots = np.roots(cs[::-1])
    dp = poly.derivative()
    dcs = [float(c / scale) for c in dp]
    out = []
    for z in roots:
        z = complex(z)
        for _ in range(3):
            fz = sum(c * z ** i for i, c in enumerate(cs))
            dz = sum(c * z ** i for i, c in enumerate(dcs))
            if dz == 0:
                break
            z = z - fz / dz
        if abs(z.imag) < 1e-12 * max(1.0, abs(z.real)):
            z = complex(z.real, 0.0)
        out.append(z)
    out.sort(key=lambda z: (z.real, z.imag))
    return out


def root_residual(q, z):
    "|Q(z)| relative to sum |c_i| |z|^i."
    poly = q.poly if isinstance(q, QPolynomial) else q
    z = complex(z)
    val = sum(float(c) * z ** i for i, c in enumerate(poly))
    ref = sum(abs(float(c)) * abs(z) ** i for i, c in enumerate(poly))
    return abs(val) / ref if ref else abs(val)


def random_euler_inputs(count, seed=0, max_m=4):
    """
    Deterministic stream of valid EulerInputs with small rational
    parameters, m_total <= max_m and Q(0) != 0.
    """
    rng = random.Random(seed)

    def small():
        return Fraction(rng.randint(-12, 12), rng.randint(1, 6))

    def positive():
        return Fraction(rng.randint(1, 15), rng.randint(1, 6))

    out = []
    while len(out) < count:
        r = rng.randint(0, 2)
        m = []
        while len(m) < r:
            mi = rng.randint(1, 2)
            if sum(m) + mi <= max_m:
                m.append(mi)
            else:
                break
        f = [positive() for _ in m]
        c = positive()
        try:
            inp = EulerInput(small(), small(), c, f, m)
            if q_polynomial(inp).vanishes_at_zero:
                continue
        except ValueError:
            continue
        out.append(inp)
    return out
