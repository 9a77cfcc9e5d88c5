"""
Grassmannians and Schubert varieties
====================================

The Pluecker coordinate ring of Gr(k, n) has Hilbert function given by the
multiset k-Narayana numbers, and its h-polynomial is N_{k,n-k}(t).
Schubert varieties X(a) have Hilbert function {a}_j.
"""

from math import comb

from knarayana.grassmann import (GrassmannianId, SchubertIndex, all_schubert_indices, h_polynomial,
                                 hilbert_polynomial, hilbert_series_coeffs, schubert_degree,
                                 schubert_dimension, schubert_h_vector)

g = GrassmannianId(2, 4)
print("Gr(2,4) series:", hilbert_series_coeffs(g, 6).as_ints())
print("quadric check :", [comb(j + 5, 5) - comb(j + 3, 5) for j in range(7)])
print("Hilbert polynomial:", hilbert_polynomial(g).pretty("j"))
print("h-polynomial:", h_polynomial(g).pretty())

for k, n in [(2, 5), (2, 6), (3, 6), (3, 7)]:
    g = GrassmannianId(k, n)
    h = h_polynomial(g)
    print("Gr(%d,%d): dim %d, h = %s, degree %d" % (k, n, g.dim, h.pretty(), sum(h)))

print()
print("Schubert varieties in Gr(2,5):")
for s in all_schubert_indices(2, 5):
    d, D = schubert_dimension(s)
    print("  X%s dim %d h-vector %s degree %d" % (s.a, d, schubert_h_vector(s), schubert_degree(s)))

s = SchubertIndex.full(3, 6)
print("full index", s.a, "h-vector", schubert_h_vector(s), "=", [int(c) for c in h_polynomial(GrassmannianId(3, 6))])
