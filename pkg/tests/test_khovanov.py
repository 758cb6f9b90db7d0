from itertools import product

import pytest
from hypothesis import given, strategies as st

from khsplit import catalog
from khsplit.algebra import LaurentPolynomial
from khsplit.diagrams import glue
from khsplit.khovanov import (BigradedDims, frobenius_merge, frobenius_split, homology, jones, jones_t,
                              khovanov_complex, khovanov_homology)

u = LaurentPolynomial.qdim_v()


def state_sum_jones(d):
    """Kauffman-style state sum, independent of the cube and of homology."""
    total = LaurentPolynomial()
    for s in product((0, 1), repeat=len(d.crossings)):
        r = sum(s)
        total = total + LaurentPolynomial.monomial(r, (-1) ** r) * u ** len(d.smooth(s))
    shift = LaurentPolynomial.monomial(d.l_plus - 2 * d.l_minus, (-1) ** d.l_minus)
    return (total * shift).exact_div(u)


ALL_DIAGRAMS = [e.obj for e in catalog.diagrams()] + [glue(e.obj) for e in catalog.cuts()]


def test_frobenius_tables():
    assert frobenius_merge(1, 1) == 1 and frobenius_merge(1, -1) == -1 and frobenius_merge(-1, -1) is None
    assert sorted(frobenius_split(1)) == [(-1, 1), (1, -1)] and frobenius_split(-1) == [(-1, -1)]


@pytest.mark.parametrize("d", ALL_DIAGRAMS, ids=lambda d: d.name)
def test_jones_matches_state_sum(d):
    assert jones(d) == state_sum_jones(d)


@pytest.mark.parametrize("d", ALL_DIAGRAMS, ids=lambda d: d.name)
def test_complex_axioms(d):
    c = khovanov_complex(d)
    c.check_d_squared()
    c.check_q_degree()
    assert c.chi_q() == homology(c).euler()


@pytest.mark.parametrize("name, kh", [
    ("unknot", {(0, -1): 1, (0, 1): 1}),
    ("unknot_kink", {(0, -1): 1, (0, 1): 1}),
    ("mirror_unknot_kink", {(0, -1): 1, (0, 1): 1}),
    ("hopf", {(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}),
    ("mirror_hopf", {(0, 0): 1, (0, -2): 1, (-2, -4): 1, (-2, -6): 1}),
    ("trefoil", {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}),
    ("mirror_trefoil", {(0, -1): 1, (0, -3): 1, (-2, -5): 1, (-3, -9): 1}),
    ("solomon", {(0, 0): 1, (0, 2): 1, (1, 2): 1, (2, 6): 1, (4, 8): 1, (4, 10): 1}),
])
def test_known_homology(name, kh):
    assert khovanov_homology(catalog.get(name).obj) == kh


@pytest.mark.parametrize("d", ALL_DIAGRAMS, ids=lambda d: d.name)
def test_homology_at_t_minus_one_is_u_times_jones(d):
    assert khovanov_homology(d).euler() == u * jones(d)


@pytest.mark.parametrize("a, b", [("unknot", "unknot_kink"), ("unknot", "mirror_unknot_kink"),
                                  ("solomon", "solomon_cut"),
                                  ("hopf_connected_sum", "hopf_connected_sum_cut")])
def test_same_link_same_homology(a, b):
    def link(name):
        e = catalog.get(name)
        return glue(e.obj) if e.is_cut else e.obj
    assert khovanov_homology(link(a)) == khovanov_homology(link(b))


def test_display_forms():
    kh = khovanov_homology(catalog.get("solomon").obj)
    assert str(kh) == "V{1} + k{2}[1] + k{6}[2] + V{9}[4]"
    assert jones_t(jones(catalog.get("trefoil").obj)) == "t + t^3 - t^4"


def test_mirror_dualizes():
    for e in catalog.diagrams():
        kh = khovanov_homology(e.obj).dims
        mk = khovanov_homology(e.obj.mirror()).dims
        assert mk == {(-r, -j): v for (r, j), v in kh.items()}


def test_disjoint_union_tensors():
    cp = catalog.get("split_cut").obj
    kh = khovanov_homology(glue(cp))
    assert kh == khovanov_homology(cp.tangle1).tensor(khovanov_homology(cp.tangle2))


@given(st.sampled_from([d for d in ALL_DIAGRAMS if len(d.crossings) <= 5]), st.randoms(use_true_random=False))
def test_circle_order_does_not_change_homology(d, rnd):
    def shuffled(diagram, state, sm):
        order = list(range(len(sm.circles)))
        rnd.shuffle(order)
        return order
    c = khovanov_complex(d, shuffled)
    c.check_d_squared()
    assert homology(c) == khovanov_homology(d)


@given(st.sampled_from(ALL_DIAGRAMS), st.data())
def test_crossing_order_does_not_change_homology(d, data):
    perm = data.draw(st.permutations(range(len(d.crossings))))
    assert khovanov_homology(d.with_crossing_order(perm)) == khovanov_homology(d)


def test_bigraded_dims_helpers():
    v = BigradedDims({(0, -1): 1, (0, 1): 1})
    assert v.euler() == u and v.tensor(v).total_dim() == 4 and str(v) == "V{0}"
