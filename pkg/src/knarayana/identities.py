"""
Registry of identities connecting the Narayana families, the hypergeometric
representations, the Euler transform and the Grassmannian data.

Each check walks a bounded grid and returns the first counterexample (a
short string) or None. ``LEDGER`` holds identities that must hold;
``PRINTED_CLAIMS`` holds statements in their originally printed indexing
that are known to be off, so for those a counterexample is the expected
outcome and documents the discrepancy (see ERRATA.md).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from .core import binomial, multiset
from .euler import narayana_input, narayana_via_euler, q_polynomial, random_euler_inputs, verify_euler_identity
from .grassmann import (all_schubert_indices, h_polynomial, hilbert_polynomial,
                        hilbert_series_coeffs, hodge_littlewood, schubert_degree,
                        schubert_dimension, schubert_h_vector, SchubertIndex,
                        sulanke_from_curly)
from .hypergeom import (coefficient, coefficients, narayana_series_spec, reduce,
                        same_parameters, simple_polynomial_spec)
from .narayana import (curly_bracket, multiset_narayana, multiset_series, narayana_classic,
                       narayana_polynomial, narayana_support, round_bracket,
                       simple_narayana_product, square_bracket, sulanke_narayana,
                       sulanke_via_determinant, sulanke_via_multiset, sulanke_via_simple)
from .paths import count_narayana_paths, count_sulanke_paths, count_sulanke_paths_dp, total_chamber_paths
from .series import series_scale_binomial_power


@dataclass(frozen=True)
class Grid:
    kmax: int = 4
    rmax: int = 6
    jmax: int = 8
    seed: int = 0


@dataclass(frozen=True)
class Identity:
    name: str
    statement: str
    check: Callable = field(repr=False, compare=False)

    def run(self, grid=Grid()):
        return self.check(grid)


LEDGER = []
PRINTED_CLAIMS = []


def identity(registry, name, statement):
    def deco(fn):
        registry.append(Identity(name, statement, fn))
        return fn
    return deco


def _first(cases, lhs, rhs):
    for case in cases:
        x, y = lhs(*case), rhs(*case)
        if x != y:
            return "%r: %s != %s" % (case, x, y)
    return None


def _krj(g, r0=1, j0=0):
    return product(range(1, g.kmax + 1), range(r0, g.rmax + 1), range(j0, g.jmax + 1))


# -- bracket determinants and product formulas --------------------------------

@identity(LEDGER, "multiset_product_is_square_bracket",
          "multiset_narayana(k,r,j) = [r,...,r]_j")
def _(g):
    return _first(_krj(g), multiset_narayana, lambda k, r, j: square_bracket((r,) * k, j))


@identity(LEDGER, "square_bracket_transpose",
          "[r,...,r]_j = [j+1,...,j+1]_(r-1)")
def _(g):
    return _first(_krj(g), lambda k, r, j: square_bracket((r,) * k, j),
                  lambda k, r, j: square_bracket((j + 1,) * k, r - 1))


@identity(LEDGER, "product_forms",
          "prod multiset(j+i,r-1)/multiset(i,r-1) = prod multiset(r-1+i,j)/multiset(i,j), "
          "and both simple product forms agree")
def _(g):
    def multiset_second(k, r, j):
        num = den = 1
        for i in range(1, k + 1):
            num *= multiset(r - 1 + i, j)
            den *= multiset(i, j)
        return Fraction(num, den)

    def simple_first(k, r, j):
        num = den = 1
        for i in range(1, k + 1):
            num *= binomial(r - 1 + i, j)
            den *= multiset(i, j)
        return Fraction(num, den)

    return (_first(_krj(g), multiset_narayana, multiset_second)
            or _first(_krj(g), simple_narayana_product, simple_first))


@identity(LEDGER, "square_is_curly",
          "[r,...,r]_j = {r+k-1,...,r+k-1}_j in both curly forms")
def _(g):
    return (_first(_krj(g), lambda k, r, j: square_bracket((r,) * k, j),
                   lambda k, r, j: curly_bracket((r + k - 1,) * k, j))
            or _first(_krj(g), lambda k, r, j: square_bracket((r,) * k, j),
                      lambda k, r, j: curly_bracket((r + k - 1,) * k, j, "form2")))


@identity(LEDGER, "curly_forms_agree",
          "{a}_j form1 = form2 for strictly increasing a with entries <= 8")
def _(g):
    cases = [(a, j) for k in range(1, g.kmax + 1)
             for a in combinations(range(1, 9), k) for j in range(g.jmax + 1)]
    return _first(cases, curly_bracket, lambda a, j: curly_bracket(a, j, "form2"))


@identity(LEDGER, "round_bracket_shift",
          "(r+1,...,r+1)_j = simple_narayana_product(k,r,j)")
def _(g):
    return _first(_krj(g), lambda k, r, j: round_bracket((r + 1,) * k, j),
                  simple_narayana_product)


@identity(LEDGER, "multiset_is_shifted_simple",
          "multiset_narayana(k,r,j) = simple_narayana_product(k,r+j-1,j)")
def _(g):
    return _first(_krj(g), multiset_narayana,
                  lambda k, r, j: simple_narayana_product(k, r + j - 1, j))


# -- Sulanke numbers ------------------------------------------------------------

@identity(LEDGER, "multiset_from_sulanke",
          "multiset_narayana(k,r,j) = sum_l C(k(r-1)+j-l, k(r-1)) N_k(r-1,l)")
def _(g):
    def rhs(k, r, j):
        return sum(binomial(k * (r - 1) + j - l, k * (r - 1)) * sulanke_narayana(k, r - 1, l)
                   for l in range(j + 1))
    return _first(_krj(g), multiset_narayana, rhs)


@identity(LEDGER, "sulanke_alternating_routes",
          "N_k(r,j) from the closed display, from multiset, simple and determinant values")
def _(g):
    cases = list(product(range(1, g.kmax + 1), range(1, g.rmax + 1), range(g.jmax + 1)))
    return (_first(cases, sulanke_narayana, sulanke_via_multiset)
            or _first(cases, sulanke_narayana, sulanke_via_simple)
            or _first(cases, sulanke_narayana, sulanke_via_determinant))


@identity(LEDGER, "generating_function",
          "multiset series * (1-t)^(k(r-1)+1) = N_{k,r-1}(t)")
def _(g):
    J = g.jmax
    for k, r in product(range(1, g.kmax + 1), range(1, g.rmax + 1)):
        s = series_scale_binomial_power(multiset_series(k, r, J), k * (r - 1) + 1)
        n = narayana_polynomial(k, r - 1)
        if list(s) != [n[i] for i in range(J + 1)]:
            return "(k,r)=(%d,%d): %s vs %s" % (k, r, s.as_ints(), list(n))
    return None


@identity(LEDGER, "palindromic", "N_{k,r}(t) is palindromic")
def _(g):
    for k, r in product(range(1, g.kmax + 1), range(1, g.rmax + 1)):
        if not narayana_polynomial(k, r).is_palindromic():
            return "(k,r)=(%d,%d)" % (k, r)
    return None


@identity(LEDGER, "classic_narayana", "N_2(r,j) = C(r,j) C(r,j+1) / r for r <= 8")
def _(g):
    cases = [(r, j) for r in range(1, 9) for j in range(r + 1)]
    return _first(cases, lambda r, j: sulanke_narayana(2, r, j), narayana_classic)


@identity(LEDGER, "reduction_symmetry",
          "N_{k,r-1} = N_{r-1,k} (multiset series reduction, corrected index)")
def _(g):
    for k in range(1, g.kmax + 1):
        for r in range(2, k + 2):
            if narayana_polynomial(k, r - 1) != narayana_polynomial(r - 1, k):
                return "(k,r)=(%d,%d)" % (k, r)
    return None


# -- hypergeometric -------------------------------------------------------------

@identity(LEDGER, "hypergeometric_series",
          "coefficient(kF(k-1)(r..r+k-1; 2..k), j) = multiset_narayana(k,r,j), j <= 10")
def _(g):
    cases = product(range(1, g.kmax + 1), range(1, g.rmax + 1), range(11))
    return _first(cases, lambda k, r, j: coefficient(narayana_series_spec(k, r), j),
                  multiset_narayana)


@identity(LEDGER, "hypergeometric_simple",
          "coefficient(kF(k-1)(-r..-r-k+1; 2..k; (-1)^k t), j) = simple product, j <= 10")
def _(g):
    cases = product(range(1, g.kmax + 1), range(1, g.rmax + 1), range(11))
    return _first(cases, lambda k, r, j: coefficient(simple_polynomial_spec(k, r), j),
                  simple_narayana_product)


@identity(LEDGER, "parameter_reduction",
          "reduce(series spec (k,r)) = series spec (r-1,k+1) when k >= r >= 2")
def _(g):
    for k in range(2, g.kmax + 1):
        for r in range(2, k + 1):
            red = reduce(narayana_series_spec(k, r))
            if not same_parameters(red, narayana_series_spec(r - 1, k + 1)):
                return "(k,r)=(%d,%d): %s" % (k, r, red)
            if coefficients(red, 15) != coefficients(narayana_series_spec(k, r), 15):
                return "(k,r)=(%d,%d): stream changed" % (k, r)
    return None


# -- Euler transform ------------------------------------------------------------

@identity(LEDGER, "euler_random_inputs",
          "generalized Euler transform holds to t^20 on 25 seeded random inputs")
def _(g):
    for inp in random_euler_inputs(25, seed=g.seed):
        res = verify_euler_identity(inp, 20)
        if not res:
            return "%r at t^%d" % (inp, res.first_mismatch)
    return None


@identity(LEDGER, "euler_narayana_inputs",
          "generalized Euler transform holds to t^20 for Narayana inputs k in {3,4}, r in {4,5,6}")
def _(g):
    for k, r in product((3, 4), (4, 5, 6)):
        res = verify_euler_identity(narayana_input(k, r), 20)
        if not res:
            return "(k,r)=(%d,%d) at t^%d" % (k, r, res.first_mismatch)
    return None


@identity(LEDGER, "euler_product_formula",
          "Euler route N_k(r,j) = N_k(r,j) for k in {2,3,4}, r in {3..6}")
def _(g):
    cases = [(k, r, j) for k in (2, 3, 4) for r in range(3, 7)
             for j in range(narayana_support(k, r) + 1)]
    return _first(cases, narayana_via_euler, sulanke_narayana)


# -- path oracle ----------------------------------------------------------------

SULANKE_ORACLE_CASES = ((2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (4, 3))


@identity(LEDGER, "sulanke_path_oracle",
          "chamber path counts by ascents = N_k(r,j); DFS, DP and total counts agree")
def _(g):
    for k, r in SULANKE_ORACLE_CASES:
        dfs = count_sulanke_paths((k, r))
        if dfs != count_sulanke_paths_dp(k, r):
            return "(k,r)=(%d,%d): DFS and DP differ" % (k, r)
        if sum(dfs.values()) != total_chamber_paths(k, r):
            return "(k,r)=(%d,%d): totals differ" % (k, r)
        formula = {j: sulanke_narayana(k, r, j) for j in range(narayana_support(k, r) + 1)}
        if dfs != formula:
            return "(k,r)=(%d,%d): %s vs %s" % (k, r, dfs, formula)
    return None


def nonincreasing_tuples(kmax, amax):
    for k in range(1, kmax + 1):
        for a in product(range(1, amax + 1), repeat=k):
            if all(a[i] >= a[i + 1] for i in range(k - 1)):
                yield a


@identity(LEDGER, "narayana_path_oracle_shifted",
          "(j+1)-step Narayana path count to a = (a)_j, entries <= 7, j <= 4")
def _(g):
    cases = [(a, j) for a in nonincreasing_tuples(3, 7) for j in range(5)]
    return _first(cases, lambda a, j: count_narayana_paths((a, j + 1)), round_bracket)


# -- Grassmannians and Schubert varieties --------------------------------------

@identity(LEDGER, "hilbert_function_is_polynomial",
          "dim R_j of Gr(k,n) = Hilbert polynomial at j, j <= 10, k <= 4, n <= 8")
def _(g):
    for k in range(1, 5):
        for n in range(k, 9):
            p = hilbert_polynomial((k, n))
            s = hilbert_series_coeffs((k, n), 10)
            for j in range(11):
                if p(j) != s[j]:
                    return "Gr(%d,%d) j=%d" % (k, n, j)
    return None


@identity(LEDGER, "grassmannian_h_polynomial",
          "h-polynomial of Gr(k,n) = N_{k,n-k} = h-vector of the full Schubert index")
def _(g):
    for k in range(1, 4):
        for n in range(k, 8):
            h = h_polynomial((k, n))
            if schubert_h_vector(SchubertIndex.full(k, n)) != list(h):
                return "Gr(%d,%d)" % (k, n)
    return None


@identity(LEDGER, "schubert_sulanke_reduction",
          "sum_l (-1)^l {n,...,n}_{i-l} C(k(n-k)+1,l) = N_k(n-k,i), k <= 3, n <= 7")
def _(g):
    cases = [(k, n, i) for k in range(1, 4) for n in range(k, 8) for i in range(k * (n - k) + 2)]
    return _first(cases, sulanke_from_curly, lambda k, n, i: sulanke_narayana(k, n - k, i))


@identity(LEDGER, "schubert_h_vectors",
          "Schubert h-vectors are nonnegative, sum to the degree, and dim = sum(a_i - i)")
def _(g):
    for k in range(1, 4):
        for n in range(k, 8):
            for s in all_schubert_indices(k, n):
                h = schubert_h_vector(s)
                if min(h) < 0:
                    return "%r: negative h %s" % (s.a, h)
                if sum(h) != schubert_degree(s):
                    return "%r: sum h != degree" % (s.a,)
                schubert_dimension(s)
    return None


# -- statements as printed --------------------------------------------------------

@identity(PRINTED_CLAIMS, "square_bracket_transpose_as_printed", "[r,...,r]_j = [j,...,j]_r")
def _(g):
    return _first(_krj(g, j0=1), lambda k, r, j: square_bracket((r,) * k, j),
                  lambda k, r, j: square_bracket((j,) * k, r))


@identity(PRINTED_CLAIMS, "simple_narayana_as_round_bracket",
          "(r,...,r)_j = prod_{i<k} C(r+i,j)/C(j+i,j)")
def _(g):
    return _first(_krj(g, j0=1), lambda k, r, j: round_bracket((r,) * k, j), simple_narayana_product)


@identity(PRINTED_CLAIMS, "series_numerator_as_printed",
          "multiset series = N_{k,r}(t) / (1-t)^(k(r-1)+1)")
def _(g):
    J = g.jmax
    for k, r in product(range(2, g.kmax + 1), range(2, g.rmax + 1)):
        s = series_scale_binomial_power(multiset_series(k, r, J), k * (r - 1) + 1)
        n = narayana_polynomial(k, r)
        if list(s) != [n[i] for i in range(J + 1)]:
            return "(k,r)=(%d,%d): %s vs %s" % (k, r, s.as_ints()[:n.degree + 2], list(n))
    return None


@identity(PRINTED_CLAIMS, "alternating_sum_as_printed",
          "N_k(r,j) = sum_l (-1)^(j-l) C(kr+1, j-l) multiset_narayana(k, r-1, l)")
def _(g):
    def rhs(k, r, j):
        return sum((-1) ** (j - l) * binomial(k * r + 1, j - l) * multiset_narayana(k, r - 1, l)
                   for l in range(j + 1))
    return _first(_krj(g, r0=2, j0=1), sulanke_narayana, rhs)


@identity(PRINTED_CLAIMS, "reduction_as_printed", "N_{k,r} = N_{r-1,k+1} for 3 <= r <= k+1 <= 5")
def _(g):
    for k in range(2, 5):
        for r in range(3, k + 2):
            if narayana_polynomial(k, r) != narayana_polynomial(r - 1, k + 1):
                return "(k,r)=(%d,%d): %s vs %s" % (k, r, narayana_polynomial(k, r),
                                                    narayana_polynomial(r - 1, k + 1))
    return None


@identity(PRINTED_CLAIMS, "grassmannian_h_index_as_printed", "h-polynomial of Gr(k,n) = N_{k,n-k+1}")
def _(g):
    for k in range(2, 4):
        for n in range(k + 1, 8):
            if h_polynomial((k, n)) != narayana_polynomial(k, n - k + 1):
                return "Gr(%d,%d): %s vs %s" % (k, n, h_polynomial((k, n)),
                                                narayana_polynomial(k, n - k + 1))
    return None


@identity(PRINTED_CLAIMS, "hodge_littlewood_unshifted", "d_{k,n}(j) = dim R_j of Gr(k,n)")
def _(g):
    for k in range(1, 4):
        for n in range(k + 1, 7):
            for j in range(6):
                if hodge_littlewood(k, n, j) != multiset_narayana(k, n - k + 1, j):
                    return "Gr(%d,%d) j=%d: %s vs %s" % (k, n, j, hodge_littlewood(k, n, j),
                                                         multiset_narayana(k, n - k + 1, j))
    return None


@identity(PRINTED_CLAIMS, "product_formula_constants",
          "upper parameters of the transformed series are -(k+1)r-2k-3, -(k+1)r-2k-2")
def _(g):
    for k, r in product((3, 4), (4, 5, 6)):
        inp = narayana_input(k, r)
        got = sorted([inp.c - inp.a - inp.m_total, inp.c - inp.b - inp.m_total])
        printed = sorted([-(k + 1) * r - 2 * k - 3, -(k + 1) * r - 2 * k - 2])
        if got != printed:
            return "(k,r)=(%d,%d): %s vs printed %s" % (k, r, [str(x) for x in got], printed)
    return None


@identity(PRINTED_CLAIMS, "example_table_r4", "N_3(r,j) = C(25,j) C(24,j) (1+4j) for the r=4 row")
def _(g):
    for r in (3, 4):
        for j in range(1, 3):
            printed = binomial(25, j) * binomial(24, j) * (1 + 4 * j)
            if sulanke_narayana(3, r, j) != printed:
                return "N_3(%d,%d) = %d vs printed %d" % (r, j, sulanke_narayana(3, r, j), printed)
    return None


@identity(PRINTED_CLAIMS, "narayana_paths_unshifted",
          "j-step Narayana path count to a = (a)_j, entries <= 7, j <= 4")
def _(g):
    cases = [(a, j) for a in nonincreasing_tuples(3, 7) for j in range(5)]
    return _first(cases, lambda a, j: count_narayana_paths((a, j)), round_bracket)


@identity(PRINTED_CLAIMS, "q_degree", "deg Q = (k-2)(r-3) for k in {3,4}, r in {4,5,6}")
def _(g):
    for k, r in product((3, 4), (4, 5, 6)):
        d = q_polynomial(narayana_input(k, r)).degree
        if d != (k - 2) * (r - 3):
            return "(k,r)=(%d,%d): deg Q = %d, claimed %d" % (k, r, d, (k - 2) * (r - 3))
    return None


def run_all(grid=Grid(), registry=None):
    "[(identity, counterexample or None), ...] in registry order."
    registry = LEDGER if registry is None else registry
    return [(ident, ident.run(grid)) for ident in registry]
