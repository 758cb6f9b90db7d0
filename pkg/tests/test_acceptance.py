"""Acceptance criteria 1-9, one test each, at exact equality.

The PASS/FAIL line for every criterion is written to the terminal.
Criterion 7 is expected to fail: the closed-form circle count over
NC_n is wrong at n = 4 (two pairs), see test_criterion_7_closure_counterexample.
"""
import pytest

from khsplit.acceptance import CRITERIA, run_all
from khsplit.partitions import SetPartition, catalan, dihedral_act, dihedral_group, enumerate_nc, is_noncrossing, meet
from khsplit.surgery import closure_circle_count, matching_cycle_count

TITLES = {cid: title for cid, title, _ in CRITERIA}


@pytest.fixture(scope="module")
def results(pytestconfig):
    res = {r.cid: r for r in run_all()}
    tr = pytestconfig.pluginmanager.get_plugin("terminalreporter")
    if tr is not None:
        tr.write_line("")
        for r in res.values():
            tr.write_line(f"{r.line()}  ({r.seconds:.2f}s)")
    else:
        for r in res.values():
            print(r.line())
    return res


@pytest.mark.parametrize("cid", ["1", "2", "3", "4", "5", "6", "8", "9"])
def test_criterion(cid, results):
    r = results[cid]
    assert r.ok, r.line()


@pytest.mark.xfail(strict=True, reason="n + |A v B| - |A ^ B| miscounts the closed curves for 2 pairs in NC_4")
def test_criterion_7(results):
    r = results["7"]
    assert r.ok, r.line()


def test_criterion_7_failure_is_only_the_closure_count(results):
    detail = results["7"].detail
    assert detail == ["closure count != cycle count for 2 pairs at n=4"]


def test_criterion_7_attainable_parts():
    for n in range(1, 6):
        nc = enumerate_nc(n)
        assert len(nc) == catalan(n)
        assert all(is_noncrossing(meet(a, b)) for a in nc for b in nc)
        assert all(is_noncrossing(dihedral_act(r, p, f)) for p in nc for r, f in dihedral_group(n))
    for n in range(1, 4):
        nc = enumerate_nc(n)
        assert all(closure_circle_count(a, b) == matching_cycle_count(a, b) for a in nc for b in nc)


def test_criterion_7_closure_counterexample():
    a, b = SetPartition.parse("{1,2|3,4}"), SetPartition.parse("{1,4|2,3}")
    assert (closure_circle_count(a, b), matching_cycle_count(a, b)) == (1, 2)


def test_all_criteria_reported(results):
    assert sorted(results, key=int) == [str(i) for i in range(1, 10)]
    assert set(TITLES) | {"9"} == set(results)
