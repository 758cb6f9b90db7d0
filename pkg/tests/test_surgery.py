import pytest

from khsplit import catalog
from khsplit.diagrams import OrientedDiagram, glue, pend
from khsplit.khovanov import homology, khovanov_complex, khovanov_homology
from khsplit.partitions import SetPartition, enumerate_nc
from khsplit.surgery import (boundary_partition, classify_circles, closure_circle_count, compatible_order,
                             matching_cycle_count, matching_of, surgery, surgery_family)

UNKNOT_KH = {(0, 1): 1, (0, -1): 1}


def arcs_diagram(a: SetPartition, b: SetPartition) -> OrientedDiagram:
    """Closed crossingless diagram: a's arcs run b -> a on one side, b's arcs come back."""
    edges = {}
    for bi, ai in matching_of(a).pairs.items():
        edges[f"x{bi}"] = (pend(f"b{bi}"), pend(f"a{ai}"))
    for bi, ai in matching_of(b).pairs.items():
        edges[f"y{bi}"] = (pend(f"a{ai}"), pend(f"b{bi}"))
    return OrientedDiagram([], edges)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cycle_count_matches_geometry(n):
    nc = enumerate_nc(n)
    for a in nc:
        for b in nc:
            assert matching_cycle_count(a, b) == len(arcs_diagram(a, b).smooth(()))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closure_formula_holds_up_to_three(n):
    nc = enumerate_nc(n)
    assert all(closure_circle_count(a, b) == matching_cycle_count(a, b) for a in nc for b in nc)


def test_closure_formula_breaks_at_four():
    a, b = SetPartition.parse("{1,2|3,4}"), SetPartition.parse("{1,4|2,3}")
    assert closure_circle_count(a, b) == 1
    assert matching_cycle_count(a, b) == 2
    nc = enumerate_nc(4)
    bad = [(x, y) for x in nc for y in nc if closure_circle_count(x, y) != matching_cycle_count(x, y)]
    assert len(bad) == 2


def test_diagonal_counts():
    # each arc meets its own reverse: n small loops
    for n in range(1, 5):
        for a in enumerate_nc(n):
            assert matching_cycle_count(a, a) == n


def test_crossing_partition_rejected():
    with pytest.raises(ValueError, match="crossing"):
        matching_of(SetPartition.parse("{1,3|2,4}"))


@pytest.mark.parametrize("entry", catalog.cuts(), ids=lambda e: e.name)
def test_surgeries_are_closed_and_sound(entry):
    cp = entry.obj
    fam = surgery_family(cp, 1)
    assert fam.index == enumerate_nc(cp.n)
    for side in (1, 2):
        for p in enumerate_nc(cp.n):
            d = surgery(cp, side, p)
            assert d.is_closed()
            cx = khovanov_complex(d)
            cx.check_d_squared()
            assert homology(cx).euler() == cx.chi_q()


def test_solomon_surgeries():
    cp = catalog.get("solomon_cut").obj
    full, triv = SetPartition.full(2), SetPartition.trivial(2)
    assert khovanov_homology(surgery(cp, 1, full)) == UNKNOT_KH
    # the trivial closure of a clasp with two crossings is a Hopf link
    assert khovanov_homology(surgery(cp, 1, triv)) == {(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}


def test_solomon_boundary_maps():
    cp = catalog.get("solomon_cut").obj
    full, triv = SetPartition.full(2), SetPartition.trivial(2)
    got = {s: boundary_partition(cp, 1, s) for s in surgery(cp, 1, full).states()}
    assert sorted(got.values(), key=str).count(full) == 3
    assert got[(1, 1)] == triv


@pytest.mark.parametrize("entry", catalog.cuts(), ids=lambda e: e.name)
def test_boundary_partition_is_noncrossing(entry):
    from khsplit.partitions import is_noncrossing
    cp = entry.obj
    for side in (1, 2):
        for s in surgery(cp, side, SetPartition.full(cp.n)).states():
            assert is_noncrossing(boundary_partition(cp, side, s))


@pytest.mark.parametrize("entry", catalog.cuts(), ids=lambda e: e.name)
def test_compatible_order_is_a_permutation(entry):
    cp = entry.obj
    for side in (1, 2):
        d = surgery(cp, side, SetPartition.full(cp.n))
        for s in d.states():
            order = compatible_order(d, side, s)
            assert sorted(order) == list(range(len(d.smooth(s))))


@pytest.mark.parametrize("entry", catalog.cuts(), ids=lambda e: e.name)
def test_circle_classes_cover_every_circle(entry):
    cp = entry.obj
    L = glue(cp)
    for s in L.states():
        cls = classify_circles(cp, s, L)
        assert sorted(map(sorted, cls.ordered())) == sorted(map(sorted, L.smooth(s).circles))
        assert all(not any(e.startswith("2.") for e in c) for c in cls.inner1)
        assert all(not any(e.startswith("1.") for e in c) for c in cls.inner2)
