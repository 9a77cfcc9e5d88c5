"""
Exact scalar combinatorics.

Integers are Python ints and rationals are :class:`fractions.Fraction`;
both are arbitrary precision, so nothing here ever overflows or rounds.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def as_rational(x):
    "Coerce an int, Fraction or 'p/q' string to a Fraction."
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(x)


def binomial(n, k):
    """
    Generalized binomial coefficient n(n-1)...(n-k+1)/k!.

    The upper argument may be negative or rational. A negative lower
    argument gives 0, which is the convention the bracket determinants rely
    on when j+l-i drops below zero.
    """
    if k < 0:
        return 0
    if isinstance(n, int):
        if 0 <= n < k:
            return 0
        if n >= 0:
            return comb(n, k)
        num = 1
        for i in range(k):
            num *= n - i
        return num // factorial(k)
    n = as_rational(n)
    num = Fraction(1)
    for i in range(k):
        num *= n - i
    value = num / factorial(k)
    return int(value) if value.denominator == 1 else value


def multiset(a, b):
    "Number of size-b multisets drawn from a set of size a, C(a+b-1, b)."
    if b < 0:
        raise ValueError("multiset coefficient needs b >= 0, got %r" % (b,))
    return binomial(a + b - 1, b)


def pochhammer(a, k):
    "Rising factorial a(a+1)...(a+k-1), with (a)_0 = 1."
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    if isinstance(a, int):
        p = 1
        for i in range(k):
            p *= a + i
        return p
    a = as_rational(a)
    p = Fraction(1)
    for i in range(k):
        p *= a + i
    return p


@lru_cache(maxsize=None)
def stirling2(n, k):
    "Stirling number of the second kind S(n, k)."
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def to_int(x, what="value"):
    "Return x as an int, raising ArithmeticError if it is not integral."
    x = as_rational(x)
    if x.denominator != 1:
        raise ArithmeticError("%s is not integral: %s" % (what, x))
    return x.numerator
