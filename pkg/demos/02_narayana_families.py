"""
k-Narayana numbers and their bracket determinants
=================================================

Three families live side by side:

* N_k(r, j), the Sulanke numbers: chamber paths to (r, ..., r) by ascents.
* the multiset numbers, equal to the determinant [r, ..., r]_j.
* the simple product numbers, equal to the determinant (r+1, ..., r+1)_j.
"""

from knarayana.narayana import (curly_bracket, multiset_narayana, narayana_classic,
                                narayana_polynomial, round_bracket, simple_narayana_product,
                                square_bracket, sulanke_narayana, sulanke_via_determinant,
                                sulanke_via_multiset)

# k = 2 gives the ordinary Narayana numbers
print("N_2(5, j):", [sulanke_narayana(2, 5, j) for j in range(5)])
print("classic :", [narayana_classic(5, j) for j in range(5)])

# k = 3, r = 4: 462 paths split by ascents
row = [sulanke_narayana(3, 4, j) for j in range(7)]
print("N_3(4, j):", row, "total", sum(row))

# the same row from the alternating sums over multiset numbers or determinants
print("via multiset   :", [sulanke_via_multiset(3, 4, j) for j in range(7)])
print("via determinant:", [sulanke_via_determinant(3, 4, j) for j in range(7)])

# multiset numbers as determinants in three guises
k, r, j = 3, 4, 2
print("multiset", multiset_narayana(k, r, j),
      "square", square_bracket((r,) * k, j),
      "transposed", square_bracket((j + 1,) * k, r - 1),
      "curly", curly_bracket((r + k - 1,) * k, j))

# the product formula matches the round bracket one step up
print("simple", simple_narayana_product(2, 4, 2), "round(5,5)_2", round_bracket((5, 5), 2),
      "round(4,4)_2", round_bracket((4, 4), 2))

# Narayana polynomials are palindromic
for k in (2, 3, 4):
    p = narayana_polynomial(k, 4)
    print("N_{%d,4}(t) =" % k, p.pretty(), "palindromic:", p.is_palindromic())
