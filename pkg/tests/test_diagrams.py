import pytest

from khsplit import catalog
from khsplit.diagrams import (BoundaryRecord, CutError, CutPresentation, DiagramError, OrientedDiagram,
                              cut_presentation, glue, parse_end, validate_cut)


def _d(crossings, edges, free_loops=0):
    return OrientedDiagram(crossings, {e: (parse_end(t), parse_end(h)) for e, (t, h) in edges.items()}, free_loops)


def test_unknot_shape():
    u = catalog.get("unknot").obj
    assert len(u.crossings) == 0 and u.free_loops == 1 and u.is_closed()
    assert len(u.smooth(())) == 1


@pytest.mark.parametrize("name, signs", [
    ("hopf", (2, 0)), ("mirror_hopf", (0, 2)), ("trefoil", (3, 0)), ("mirror_trefoil", (0, 3)),
    ("solomon", (4, 0)), ("mirror_solomon", (0, 4)),
])
def test_writhe(name, signs):
    d = catalog.get(name).obj
    assert (d.l_plus, d.l_minus) == signs
    assert (d.mirror().l_plus, d.mirror().l_minus) == signs[::-1]


def test_hopf_smoothings():
    h = catalog.get("hopf").obj
    assert sorted(len(h.smooth(s)) for s in h.states()) == [1, 1, 2, 2]
    assert len(h.components()) == 2


def test_mirror_is_involution():
    for e in catalog.diagrams():
        d = e.obj
        mm = d.mirror().mirror()
        assert mm.crossings == d.crossings and dict(mm.edges) == dict(d.edges)


def test_every_edge_twice():
    # edge "1" would fill three crossing slots
    with pytest.raises(DiagramError):
        _d([["1", "1", "1", "2"]], {"1": ("X0.a", "X0.b"), "2": ("X0.c", "X0.d")})


def test_point_with_two_incoming_edges():
    with pytest.raises(DiagramError):
        _d([], {"e": ("@a1", "@b1"), "f": ("@a1", "@b1")})


def test_pd_orientation_inferred():
    d = OrientedDiagram.from_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    assert d.l_minus == 3 and d.is_closed()


def test_cut_catalog_valid():
    for e in catalog.cuts():
        assert validate_cut(e.obj).ok, e.name
        g = glue(e.obj)
        assert g.is_closed()
        assert len(g.crossings) == len(e.obj.tangle1.crossings) + len(e.obj.tangle2.crossings)


def test_solomon_cut_setup():
    cp = catalog.get("solomon_cut").obj
    assert cp.n == 2 and len(cp.tangle1.crossings) == 2 and len(cp.tangle2.crossings) == 2


def test_alternation_is_enforced():
    cp = catalog.get("solomon_cut").obj
    recs = list(cp.boundary)
    recs[1] = BoundaryRecord(recs[1].position, recs[1].edge1, recs[1].edge2, "in")
    bad = CutPresentation(cp.n, cp.tangle1, cp.tangle2, tuple(recs))
    check = validate_cut(bad)
    assert not check.ok and "alternation" in check.problems[0]
    with pytest.raises(CutError):
        glue(bad)


def test_positions_checked():
    cp = catalog.get("solomon_cut").obj
    bad = CutPresentation(cp.n, cp.tangle1, cp.tangle2, cp.boundary[:-1])
    assert not validate_cut(bad).ok


def test_mismatched_tangles_rejected():
    t1 = _d([], {"x": ("@a1", "@b1")})
    t2 = _d([], {"y": ("@a1", "@b1")})  # same direction on both sides: no closed orientation
    with pytest.raises(CutError):
        cut_presentation(1, t1, t2)
