"""
The identity ledger
===================

Every identity the package relies on is registered with a statement and a
checker. Running the ledger over a grid either confirms it or returns the
first counterexample. A second registry holds statements that fail as
printed; their counterexamples are listed as well (see ERRATA.md).
"""

import time

from knarayana.identities import PRINTED_CLAIMS, Grid, run_all

t0 = time.perf_counter()
for ident, bad in run_all(Grid(kmax=4, rmax=6, jmax=8)):
    print("%-4s %s" % ("ok" if bad is None else "FAIL", ident.statement))
print("ledger ran in %.1fs" % (time.perf_counter() - t0))

print()
for ident, bad in run_all(Grid(), PRINTED_CLAIMS):
    print("printed: %s\n    counterexample: %s" % (ident.statement, bad))
