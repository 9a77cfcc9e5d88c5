"""
The generalized Euler transform
===============================

For a, b, c and pairs (f_i, m_i) with m = sum m_i, a (r+2)F(r+1) with
upper parameters f_i + m_i and lower f_i equals (1-t)^(c-a-b-m) times an
(m+2)F(m+1) whose extra parameters are the zeros of a polynomial Q. The
coefficients only need Q(-j)/Q(0), so no roots are ever extracted.
"""


from knarayana.euler import (EulerInput, narayana_input, narayana_product_formula, numeric_roots,
                             q_polynomial, random_euler_inputs, root_residual,
                             verify_euler_identity)
from knarayana.narayana import sulanke_narayana

inp = EulerInput(5, 6, 2, (3,), (1,))
print(inp.left_spec(), "Q =", q_polynomial(inp).poly.pretty(), verify_euler_identity(inp, 20))

inputs = random_euler_inputs(10, seed=1)
print("random inputs:", sum(bool(verify_euler_identity(i, 20)) for i in inputs), "of", len(inputs), "verified")

# Narayana inputs: c = 2, a = r+k-2, b = r+k-1, (f_i, m_i) = (i, r-3) for i = 3..k
for k, r in [(3, 4), (3, 5), (3, 6), (3, 7), (4, 5)]:
    q = q_polynomial(narayana_input(k, r))
    roots = numeric_roots(q)
    print("k=%d r=%d deg Q=%d (bound %d)  Q monic = %s" % (k, r, q.degree, (k - 2) * (r - 3),
                                                         q.poly.monic().pretty()))
    for z in roots:
        print("    root %s  residual %.1e" % (z, root_residual(q, z)))
    row = [narayana_product_formula(k, r, j) for j in range((k - 1) * (r - 2) + 1)]
    print("    N_%d(%d, j) =" % (k, r - 1), [int(v) for v in row],
          row == [sulanke_narayana(k, r - 1, j) for j in range(len(row))])

# the prefactor: upper parameters -(k-1)(r-2) and -(k-1)(r-2)-1
inp = narayana_input(3, 5)
print("upper parameters:", inp.c - inp.a - inp.m_total, inp.c - inp.b - inp.m_total)
