import pytest
import sympy as sp

from khsplit import catalog
from khsplit.algebra import LaurentPolynomial, RationalFunction
from khsplit.diagrams import glue
from khsplit.khovanov import jones, khovanov_complex
from khsplit.partitions import SetPartition, enumerate_nc
from khsplit.splitting import (TwoVariablePoly, all_pieces, build_splitting_matrix, groth_recover, jones_split,
                               outer_exponent, verify_decomposition)
from khsplit.surgery import surgery

CUTS = catalog.cuts()
q = sp.Symbol("q")


def to_sympy(r: RationalFunction):
    num = sum(c * q**k for k, c in r.num.coeffs.items())
    den = sum(c * q**k for k, c in r.den.coeffs.items())
    return num / den


def test_solomon_pieces():
    cp = catalog.get("solomon_cut").obj
    full, triv = SetPartition.full(2), SetPartition.trivial(2)
    p1 = all_pieces(cp, 1)
    assert p1[full] == TwoVariablePoly({(0, 1): 1, (0, 3): 1, (1, 3): 2})
    assert p1[triv] == TwoVariablePoly({(2, 4): 1})
    assert all(v.nonnegative() for v in p1.values())


@pytest.mark.parametrize("entry", CUTS, ids=lambda e: e.name)
def test_pieces_rebuild_full_surgery(entry):
    # outer circles of a state of L^full are exactly the blocks of its boundary partition
    cp = entry.obj
    u = TwoVariablePoly.u()
    for side in (1, 2):
        total = TwoVariablePoly()
        for p, v in all_pieces(cp, side).items():
            total = total + u ** len(p) * v
        full = surgery(cp, side, SetPartition.full(cp.n))
        assert total == TwoVariablePoly.of_complex(khovanov_complex(full))


@pytest.mark.parametrize("entry", CUTS, ids=lambda e: e.name)
def test_decomposition_identities(entry):
    rep = verify_decomposition(entry.obj)
    assert rep.ok, rep.lines()


@pytest.mark.parametrize("entry", CUTS, ids=lambda e: e.name)
def test_recovery_from_surgeries(entry):
    cp = entry.obj
    for side in (1, 2):
        assert groth_recover(cp, side) == all_pieces(cp, side)


@pytest.mark.parametrize("entry", CUTS, ids=lambda e: e.name)
def test_jones_split(entry):
    rep = jones_split(entry.obj)
    assert rep.ok
    assert rep.lhs == jones(glue(entry.obj))


@pytest.mark.parametrize("rule", ["closure", "loops"])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_matrix_properties(n, rule):
    m = build_splitting_matrix(n, rule)
    assert len(m.index) == len(enumerate_nc(n))
    assert m.is_symmetric()
    assert m.inverse_ok()
    if n:
        assert m.diagonal_dominant()


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_against_sympy(n):
    m = build_splitting_matrix(n)
    c = sp.Matrix(len(m.index), len(m.index), lambda i, j: to_sympy(m.c[i, j]))
    want = c.inv()
    for i in range(len(m.index)):
        for j in range(len(m.index)):
            assert sp.simplify(to_sympy(m.b[i, j]) - want[i, j]) == 0


def test_small_matrices():
    u = LaurentPolynomial.qdim_v()
    assert build_splitting_matrix(1).c.to_rows() == [[RationalFunction(1)]]
    assert build_splitting_matrix(2).c.to_rows() == [[RationalFunction(u), RationalFunction(1)],
                                                     [RationalFunction(1), RationalFunction(u)]]
    # empty cut: J(L1 + L2) = u J(L1) J(L2)
    m0 = build_splitting_matrix(0)
    assert m0.c.to_rows() == [[RationalFunction(LaurentPolynomial.const(1), u)]]
    assert m0.b.to_rows() == [[RationalFunction(u)]]


def test_rules_differ_only_from_four():
    for n in range(1, 4):
        assert build_splitting_matrix(n, "closure").c == build_splitting_matrix(n, "loops").c
    assert build_splitting_matrix(4, "closure").c != build_splitting_matrix(4, "loops").c


def test_exponent_rule_validation():
    p = SetPartition.full(2)
    with pytest.raises(ValueError, match="rule"):
        outer_exponent(p, p, "bogus")
    with pytest.raises(ValueError):
        build_splitting_matrix(-1)


def test_two_variable_poly_basics():
    u = TwoVariablePoly.u()
    assert u.coeffs == {(0, 1): 1, (0, -1): 1}
    x = TwoVariablePoly.monomial(1, 3, 2)
    assert (x * u).at_t_minus_one() == LaurentPolynomial({4: -2, 2: -2})
    assert (x - x).is_zero()
