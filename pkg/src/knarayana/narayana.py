"""
k-Narayana number families.

Three binomial determinants

    round_bracket(a, j)   det( C(a_l - 1,     j + l - i) )
    square_bracket(a, j)  det( C(a_l + j - 1, j + l - i) )
    curly_bracket(a, j)   two equivalent determinant forms (Schubert case)

and the one-parameter families built from them:

    multiset_narayana(k, r, j)        [r,...,r]_j, closed product form
    simple_narayana_product(k, r, j)  product form, equals (r+1,...,r+1)_j
    sulanke_narayana(k, r, j)         chamber paths in Z^k counted by ascents

The numbering of ``sulanke_narayana`` follows the path model: N_k(r, .) has
support 0..(r-1)(k-1) and sums to the number of standard Young tableaux of
the k x r rectangle. The series of ``multiset_narayana(k, r, .)`` equals
N_{k, r-1}(t) / (1 - t)^(k(r-1)+1).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import binomial, multiset, to_int
from .linalg import determinant
from .poly import DensePolynomial
from .series import TruncatedSeries


@dataclass(frozen=True)
class NarayanaQuery:
    k: int
    r: int
    j: int

    def __post_init__(self):
        if self.k < 1 or self.r < 1 or self.j < 0:
            raise ValueError("need k >= 1, r >= 1, j >= 0; got %r" % (self,))


@dataclass(frozen=True)
class BracketTuple:
    a: tuple
    j: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if not self.a:
            raise ValueError("bracket tuple needs k >= 1 entries")
        if any(x < 1 for x in self.a):
            raise ValueError("bracket entries must be positive: %r" % (self.a,))
        if self.j < 0:
            raise ValueError("j must be >= 0")


def _check_k(k):
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))


def narayana_classic(r, j):
    "N(r, j) = C(r, j) C(r, j+1) / r, the Dyck path count by ascents."
    if r < 1 or j < 0:
        raise ValueError("need r >= 1, j >= 0")
    return to_int(Fraction(binomial(r, j) * binomial(r, j + 1), r), "N(%d,%d)" % (r, j))


def _bracket_det(entry, k):
    return determinant([[entry(i, l) for l in range(1, k + 1)] for i in range(1, k + 1)])


def round_bracket(a, j):
    "(a_1,...,a_k)_j = det(C(a_l - 1, j + l - i))."
    a = tuple(a)
    return _bracket_det(lambda i, l: binomial(a[l - 1] - 1, j + l - i), len(a))


def square_bracket(a, j):
    "[a_1,...,a_k]_j = det(C(a_l + j - 1, j + l - i))."
    a = tuple(a)
    return _bracket_det(lambda i, l: binomial(a[l - 1] + j - 1, j + l - i), len(a))


def curly_bracket(a, j, form="form1"):
    """
    {a_1,...,a_k}_j, the Hodge-Pedoe determinant.

    form1 uses entries C(a_{k-l+1} + j + l - i - 1, j + l - i), form2 uses
    C(a_i + j - i, j + l - i). They agree on every tuple.
    """
    a = tuple(a)
    k = len(a)
    if form == "form1":
        return _bracket_det(lambda i, l: binomial(a[k - l] + j + l - i - 1, j + l - i), k)
    if form == "form2":
        return _bracket_det(lambda i, l: binomial(a[i - 1] + j - i, j + l - i), k)
    raise ValueError("unknown curly bracket form %r" % (form,))


@lru_cache(maxsize=4096)
def _multiset_narayana(k, r, j):
    num = den = 1
    for i in range(1, k + 1):
        num *= multiset(j + i, r - 1)
        den *= multiset(i, r - 1)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("multiset Narayana (%d,%d,%d) not integral" % (k, r, j))
    return q


def multiset_narayana(k, r, j):
    "The order polynomial value [r,...,r]_j (k entries), by its product formula."
    NarayanaQuery(k, r, j)
    return _multiset_narayana(k, r, j)


def simple_narayana_product(k, r, j):
    """
    prod_{i<k} C(r+i, j) / C(j+i, j).

    This is the determinant (r+1,...,r+1)_j, not (r,...,r)_j; the two are
    one apart in r. Vanishes for j > r.
    """
    _check_k(k)
    if j < 0:
        return 0
    num = den = 1
    for i in range(k):
        num *= binomial(r + i, j)
        den *= binomial(j + i, j)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("simple Narayana (%d,%d,%d) not integral" % (k, r, j))
    return q


def narayana_support(k, r):
    "Largest j with N_k(r, j) possibly nonzero."
    return max((r - 1) * (k - 1), 0)


def _alternating(k, r, j, inner):
    total = 0
    for l in range(j + 1):
        term = binomial(k * r + 1, j - l) * inner(l)
        total += term if (j - l) % 2 == 0 else -term
    return total


@lru_cache(maxsize=4096)
def _sulanke(k, r, j):
    def inner(l):
        num = den = 1
        for i in range(k):
            num *= binomial(r + i + l, r)
            den *= binomial(r + i, r)
        return Fraction(num, den)
    return to_int(_alternating(k, r, j, inner), "N_%d(%d,%d)" % (k, r, j))


def sulanke_narayana(k, r, j):
    """
    N_k(r, j) = sum_l (-1)^(j-l) C(kr+1, j-l) prod_{i<k} C(r+i+l, r) / C(r+i, r).

    r = 0 is allowed (the empty path, N_k(0, .) = 1). Outside the support
    0 <= j <= (r-1)(k-1) the value is 0.
    """
    _check_k(k)
    if r < 0:
        raise ValueError("r must be >= 0")
    if j < 0 or j > narayana_support(k, r):
        return 0
    return _sulanke(k, r, j)


def narayana_polynomial(k, r):
    "N_{k,r}(t) = sum_j N_k(r, j) t^j."
    return DensePolynomial([sulanke_narayana(k, r, j) for j in range(narayana_support(k, r) + 1)])


def multiset_series(k, r, J):
    "The series sum_j [r,...,r]_j t^j truncated at t^J."
    if J < 0:
        raise ValueError("J must be >= 0")
    return TruncatedSeries([multiset_narayana(k, r, j) for j in range(J + 1)])


def simple_polynomial(k, r):
    "sum_{j=0}^{r} simple_narayana_product(k, r, j) t^j."
    _check_k(k)
    return DensePolynomial([simple_narayana_product(k, r, j) for j in range(r + 1)])


def sulanke_via_multiset(k, r, j):
    "N_k(r, j) as the alternating sum over multiset_narayana(k, r+1, .)."
    _check_k(k)
    if j < 0:
        return 0
    return _alternating(k, r, j, lambda l: multiset_narayana(k, r + 1, l))


def sulanke_via_simple(k, r, j):
    "N_k(r, j) as the alternating sum over simple_narayana_product(k, r+l, l)."
    _check_k(k)
    if j < 0:
        return 0
    return _alternating(k, r, j, lambda l: simple_narayana_product(k, r + l, l))


def sulanke_via_determinant(k, r, j):
    "N_k(r, j) as the alternating sum over square_bracket((r+1,...,r+1), .)."
    _check_k(k)
    if j < 0:
        return 0
    return _alternating(k, r, j, lambda l: square_bracket((r + 1,) * k, l))
