"""
Formal power series truncated at a fixed order.
"""

from fractions import Fraction

from .core import as_rational, binomial


class TruncatedSeries:
    """
    Coefficients of t^0 .. t^J. Products are cut at J; nothing silently
    extends past the order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                raise ValueError("%d coefficients exceed order %d" % (len(cs), order))
            cs += [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs order >= 0")
        self.coeffs = tuple(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def binomial_power(cls, p, order):
        "(1 - t)^p up to t^order, any integer or rational p."
        return cls([binomial(p, i) * (-1) ** i for i in range(order + 1)])

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "TruncatedSeries(%s, order=%d)" % (
            ", ".join(str(c) for c in self.coeffs), self.order)

    def _check(self, other):
        if other.order != self.order:
            raise ValueError("series orders differ: %d vs %d" % (self.order, other.order))

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self, other)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_rational(other)
            return TruncatedSeries([c * a for a in self.coeffs])
        self._check(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def as_ints(self):
        "Coefficients as ints; raises if any is not integral."
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ArithmeticError("non-integral coefficient %s" % c)
            out.append(c.numerator)
        return out


def series_mul(s, u):
    if s.order != u.order:
        raise ValueError("series orders differ: %d vs %d" % (s.order, u.order))
    J = s.order
    out = [Fraction(0)] * (J + 1)
    for i, a in enumerate(s.coeffs):
        if a == 0:
            continue
        for j in range(J + 1 - i):
            out[i + j] += a * u.coeffs[j]
    return TruncatedSeries(out)


def series_scale_binomial_power(s, p):
    "Multiply s by (1 - t)^p, keeping the order of s."
    return series_mul(s, TruncatedSeries.binomial_power(p, s.order))
