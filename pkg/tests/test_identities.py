import pytest

from knarayana.identities import LEDGER, PRINTED_CLAIMS, Grid, run_all

GRID = Grid()


@pytest.mark.parametrize("ident", LEDGER, ids=lambda i: i.name)
def test_ledger_identity(ident):
    assert ident.run(GRID) is None


@pytest.mark.parametrize("ident", PRINTED_CLAIMS, ids=lambda i: i.name)
def test_printed_claim_has_counterexample(ident):
    assert ident.run(GRID) is not None


def test_run_all_order():
    names = [i.name for i, _ in run_all(Grid(2, 3, 3))]
    assert names == [i.name for i in LEDGER]
