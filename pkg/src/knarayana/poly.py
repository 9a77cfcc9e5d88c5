"""
Dense univariate polynomials and rational functions over Q.
"""

from fractions import Fraction

from .core import as_rational


class DensePolynomial:
    """
    Polynomial with Fraction coefficients, lowest degree first.

    Trailing zeros are stripped on construction, so the zero polynomial is
    the empty tuple and ``degree`` is -1 for it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def linear(cls, c0, c1=1):
        "c0 + c1*x"
        return cls((c0, c1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DensePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == DensePolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "DensePolynomial(%s)" % (self.pretty(),)

    def pretty(self, var="t"):
        if not self.coeffs:
            return "0"
        items = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                mono = str(c)
            else:
                mono = var if i == 1 else "%s^%d" % (var, i)
                if c == -1:
                    mono = "-" + mono
                elif c != 1:
                    mono = "%s*%s" % (c, mono)
            items.append(mono)
        s = " + ".join(items)
        return s.replace("+ -", "- ")

    @staticmethod
    def _coerce(other):
        if isinstance(other, DensePolynomial):
            return other
        return DensePolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return DensePolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DensePolynomial):
            c = as_rational(other)
            return DensePolynomial([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return DensePolynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = DensePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        "Horner evaluation; works for any ring element supporting * and +."
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b):
        "Return p(a*x + b)."
        lin = DensePolynomial((b, a))
        acc = DensePolynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return DensePolynomial(quot), DensePolynomial(rem[:dq] if dq > 0 else [])

    def __divmod__(self, other):
        return self.divmod(self._coerce(other))

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def derivative(self):
        return DensePolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]


def poly_gcd(p, q):
    "Monic gcd by the Euclidean algorithm (0 if both inputs are 0)."
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def rising_poly(p, n):
    "(p)_n = p (p+1) ... (p+n-1) for a polynomial p."
    result = DensePolynomial.constant(1)
    for i in range(n):
        result = result * (p + i)
    return result


class RationalFunction:
    """
    Quotient of two polynomials kept in lowest terms with a monic
    denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, DensePolynomial):
            num = DensePolynomial.constant(num)
        if den is None:
            den = DensePolynomial.constant(1)
        elif not isinstance(den, DensePolynomial):
            den = DensePolynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, DensePolynomial.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def is_polynomial(self):
        return self.den.degree == 0

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at %s" % (x,))
        return as_rational(self.num(x)) / d

    def compose_linear(self, a, b):
        return RationalFunction(self.num.compose_linear(a, b),
                                self.den.compose_linear(a, b))

    def __repr__(self):
        return "RationalFunction((%s) / (%s))" % (self.num.pretty(), self.den.pretty())


def interpolate(points):
    """
    Lagrange interpolation through ``points`` = [(x, y), ...].

    Returns the unique polynomial of degree < len(points); abscissae must be
    pairwise distinct.
    """
    pts = [(as_rational(x), as_rational(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    result = DensePolynomial()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = DensePolynomial.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * DensePolynomial((-xj, 1))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result
