"""
Generalized hypergeometric series pFq as exact coefficient streams.

A spec never gets summed numerically; every identity is checked
coefficient by coefficient.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import as_rational, pochhammer
from .series import TruncatedSeries


def _nonpositive_int(x):
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypergeometricSpec:
    """
    pFq(upper; lower; argument_scale * t).

    A lower parameter that is a nonpositive integer -n is only allowed when
    some upper parameter is a nonpositive integer of smaller magnitude, so
    the series terminates before the division by zero is reached.
    """

    upper: tuple
    lower: tuple
    argument_scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        object.__setattr__(self, "argument_scale", as_rational(self.argument_scale))
        d = self.termination_degree()
        for b in self.lower:
            if _nonpositive_int(b) and (d is None or d >= -b):
                raise ValueError("lower parameter %s is reached before termination" % b)

    @property
    def p(self):
        return len(self.upper)

    @property
    def q(self):
        return len(self.lower)

    def termination_degree(self):
        return termination_degree(self)

    def __str__(self):
        fmt = lambda xs: ", ".join(str(x) for x in xs)
        arg = "t" if self.argument_scale == 1 else "%s*t" % self.argument_scale
        return "%dF%d(%s; %s; %s)" % (self.p, self.q, fmt(self.upper), fmt(self.lower), arg)


def termination_degree(s):
    "Least d with -d among the upper parameters, or None."
    ds = [-a.numerator for a in s.upper if _nonpositive_int(a)]
    return min(ds) if ds else None


def coefficient(s, j):
    "Coefficient of t^j."
    if j < 0:
        raise ValueError("j must be >= 0")
    d = termination_degree(s)
    if d is not None and j > d:
        return Fraction(0)
    num = Fraction(1)
    for a in s.upper:
        num *= pochhammer(a, j)
    den = Fraction(factorial(j))
    for b in s.lower:
        den *= pochhammer(b, j)
    if den == 0:
        raise ZeroDivisionError("lower Pochhammer vanishes at j=%d in %s" % (j, s))
    return num / den * s.argument_scale ** j


def coefficients(s, J):
    """
    Coefficients of t^0..t^J as a TruncatedSeries, using the term ratio
    prod(a+j) / (prod(b+j) (j+1)) instead of recomputing Pochhammers.
    """
    out = [Fraction(1)]
    d = termination_degree(s)
    c = Fraction(1)
    for j in range(J):
        if d is not None and j >= d:
            c = Fraction(0)
        else:
            num = Fraction(1)
            for a in s.upper:
                num *= a + j
            den = Fraction(j + 1)
            for b in s.lower:
                den *= b + j
            if den == 0:
                raise ZeroDivisionError("lower Pochhammer vanishes at j=%d in %s" % (j + 1, s))
            c = c * num / den * s.argument_scale
        out.append(c)
    return TruncatedSeries(out)


def reduce(s):
    "Cancel parameters that occur both upstairs and downstairs (as multisets)."
    common = Counter(s.upper) & Counter(s.lower)
    up, lo = Counter(common), Counter(common)
    upper, lower = [], []
    for a in s.upper:
        if up[a]:
            up[a] -= 1
        else:
            upper.append(a)
    for b in s.lower:
        if lo[b]:
            lo[b] -= 1
        else:
            lower.append(b)
    return HypergeometricSpec(tuple(upper), tuple(lower), s.argument_scale)


def same_parameters(s, u):
    "True when s and u agree up to reordering of the parameter lists."
    return (sorted(s.upper) == sorted(u.upper) and sorted(s.lower) == sorted(u.lower)
            and s.argument_scale == u.argument_scale)


def narayana_series_spec(k, r):
    "kF(k-1)(r, ..., r+k-1; 2, ..., k; t), the multiset Narayana series."
    if k < 1:
        raise ValueError("k must be >= 1")
    return HypergeometricSpec(tuple(range(r, r + k)), tuple(range(2, k + 1)))


def simple_polynomial_spec(k, r):
    "kF(k-1)(-r, ..., -r-k+1; 2, ..., k; (-1)^k t)."
    if k < 1:
        raise ValueError("k must be >= 1")
    return HypergeometricSpec(tuple(-r - i for i in range(k)), tuple(range(2, k + 1)),
                              (-1) ** k)
