"""Every named verify suite at reduced bounds, plus the row bookkeeping."""

import pytest

from evenfourier import verify

SMALL = {
    "ramanujan-oracles": 40,
    "convolution-basics": 200,
    "naive-oracle": 60,
    "core-equivalence": 60,
    "square-detector": 100,
    "holder": 30,
    "partial-sums": 20,
    "remainder-bound": 30,
    "sequence-multiplicativity": 6,
    "divisor-sum-identities": 30,
    "classification": 40,
    "dirichlet-series": 3,
}


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_passes(name):
    rmax = SMALL.get(name, min(verify.SUITES[name][1], 30))
    rows = verify.run_suite(name, rmax=rmax, seed=1)
    assert rows, name
    assert verify.all_passed(rows), [row for row in rows if not row.passed][:3]


def test_rows_sorted_and_summarised():
    t = verify.Tally("demo")
    t.check(5, 2, 1, 1)
    t.check(2, 9, 1, 2)
    t.check(2, 1, 3, 3)
    rows = t.finish()
    assert [(row.r, row.n, row.passed) for row in rows] == [(2, None, False), (2, 9, False), (5, None, True)]
    assert rows[0].checked == 2


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")
