from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from khsplit.algebra import (ExactMatrix, InexactDivisionError, LaurentPolynomial, RationalFunction,
                             SingularMatrixError, laurent_matrix_inverse, matrix_invert, rank, rank_and_kernel,
                             solve)

Q = sp.Symbol("q")

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
laurent = st.dictionaries(st.integers(-4, 4), coeff, max_size=4).map(LaurentPolynomial)
small_int_matrix = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4))
square_int_matrix = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))


def to_sympy(p: LaurentPolynomial):
    return sum((sp.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sp.Integer(c)) * Q ** e
               for e, c in p.items())


def rf_sympy(r: RationalFunction):
    return to_sympy(r.num) / to_sympy(r.den)


def test_zero_and_units():
    z = LaurentPolynomial()
    assert z.is_zero() and str(z) == "0"
    assert LaurentPolynomial({3: 0}) == z
    assert LaurentPolynomial.qdim_v() == LaurentPolynomial({-1: 1, 1: 1})
    assert RationalFunction.one() * RationalFunction.zero() == RationalFunction.zero()


@given(laurent, laurent)
def test_ring_ops_match_sympy(a, b):
    assert sp.expand(to_sympy(a + b) - (to_sympy(a) + to_sympy(b))) == 0
    assert sp.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(laurent, laurent)
def test_exact_div_roundtrip(a, b):
    assume(not b.is_zero())
    assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        LaurentPolynomial({0: 1}).exact_div(LaurentPolynomial({0: 1, 1: 1}))


@given(laurent, laurent, laurent, laurent)
def test_rational_functions_match_sympy(a, b, c, d):
    assume(not b.is_zero() and not d.is_zero())
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    for got, want in ((x + y, rf_sympy(x) + rf_sympy(y)), (x * y, rf_sympy(x) * rf_sympy(y))):
        assert sp.simplify(rf_sympy(got) - want) == 0
    assume(not c.is_zero())
    assert sp.simplify(rf_sympy(x / y) - rf_sympy(x) / rf_sympy(y)) == 0


@given(laurent, laurent, st.integers(-3, 3))
def test_canonical_form_is_unique(a, b, k):
    assume(not a.is_zero() and not b.is_zero())
    # scaling numerator and denominator alike must not change the representation
    m = LaurentPolynomial({k: Fraction(3, 2), k + 1: 1})
    r1, r2 = RationalFunction(a, b), RationalFunction(a * m, b * m)
    assert (r1.num, r1.den) == (r2.num, r2.den)
    assert r1.den.low == 0


def test_solomon_inverse_entry():
    u = LaurentPolynomial.qdim_v()
    r = RationalFunction(u, u * u - 1)
    # u/(u^2-1) = (q + q^3) / (1 + q^2 + q^4)
    assert r.num == LaurentPolynomial({1: 1, 3: 1}) and r.den == LaurentPolynomial({0: 1, 2: 1, 4: 1})
    assert not r.is_laurent()


@given(small_int_matrix)
def test_rank_matches_sympy(rows):
    m = ExactMatrix.from_rows(rows)
    assert rank(m) == sp.Matrix(rows).rank()
    r, ker = rank_and_kernel(m)
    assert len(ker) == m.shape[1] - r
    for v in ker:
        assert all(x == 0 for x in m.apply(v).values())


@given(square_int_matrix)
def test_inverse_matches_sympy(rows):
    m = ExactMatrix.from_rows(rows)
    sm = sp.Matrix(rows)
    if sm.det() == 0:
        with pytest.raises(SingularMatrixError):
            matrix_invert(m)
        return
    inv = matrix_invert(m)
    assert sp.Matrix(inv.to_rows()) == sm.inv()
    x = solve(m, [1] * len(rows))
    assert list(sm * sp.Matrix(x)) == [1] * len(rows)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_two_inverses_agree(n):
    from khsplit.splitting import build_splitting_matrix
    c = build_splitting_matrix(n).c
    assert laurent_matrix_inverse(c.map(RationalFunction.to_laurent)) == matrix_invert(c)


def test_substitute_t():
    # right-handed trefoil q^2 + q^6 - q^8 -> t + t^3 - t^4
    assert LaurentPolynomial({2: 1, 6: 1, -8: 0, 8: -1}).substitute_t() == {1: 1, 3: 1, 4: -1}
