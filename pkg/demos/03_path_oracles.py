"""
Brute-force path counts
=======================

The closed formulas are checked against exhaustive enumeration. Both
enumerators refuse queries beyond a budget; NARAYANA_BUDGET raises it.
"""

import time

from knarayana.narayana import round_bracket, sulanke_narayana
from knarayana.paths import (BudgetExceeded, count_narayana_paths, count_sulanke_paths,
                             count_sulanke_paths_dp)

for k, r in [(2, 3), (2, 6), (3, 4), (4, 3)]:
    counts = count_sulanke_paths((k, r))
    formula = {j: sulanke_narayana(k, r, j) for j in counts}
    print("k=%d r=%d" % (k, r), dict(counts), "matches formula:", counts == formula)

# the dynamic program reaches sizes the depth-first search cannot
t0 = time.perf_counter()
dp = count_sulanke_paths_dp(4, 6)
print("DP k=4 r=6:", [dp[j] for j in sorted(dp)], "in %.2fs" % (time.perf_counter() - t0))

# parallel enumeration gives identical buckets
print("jobs=2 agrees:", count_sulanke_paths((3, 4), jobs=2) == count_sulanke_paths((3, 4)))

# Narayana paths: (j+1) steps to a are counted by the j-th round bracket
for a in [(4, 4), (5, 3), (6, 4, 2)]:
    print(a, [count_narayana_paths((a, j + 1)) for j in range(4)],
          [round_bracket(a, j) for j in range(4)])

try:
    count_sulanke_paths((5, 6))
except BudgetExceeded as e:
    print("refused:", e)
