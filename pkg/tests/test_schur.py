"""Schur evaluations: the three routes must agree on their common domain."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtkit.linalg import complete_sym
from gtkit.schur import (
    RepeatedPointsError,
    h_at_q_powers,
    schur_bialternant,
    schur_combinatorial,
    schur_value,
    skew_schur_combinatorial,
    skew_schur_jacobi_trudi,
    skew_schur_one_variable,
    skew_schur_one_variable_det,
)

signatures = st.lists(st.integers(-2, 2), min_size=0, max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)
points = st.fractions(min_value=F(1, 3), max_value=3, max_denominator=4)


def test_known_values():
    x, y = F(2), F(3)
    assert schur_bialternant((1, 0), (x, y)) == x + y
    assert schur_bialternant((1, 1), (x, y)) == x * y
    assert schur_bialternant((2, 0), (x, y)) == x * x + x * y + y * y
    # negative parts shift by a power of the product of the points
    assert schur_bialternant((0, -1), (x, y)) == 1 / x + 1 / y
    assert schur_bialternant((), ()) == 1


def test_point_validation():
    with pytest.raises(RepeatedPointsError):
        schur_bialternant((1, 0), (F(2), F(2)))
    with pytest.raises(ValueError):
        schur_bialternant((1, 0), (F(2), F(0)))
    with pytest.raises(ValueError):
        schur_bialternant((1, 0), (F(2),))
    # dispatcher falls back to the pattern walk on repeated points
    assert schur_value((1, 0), (F(2), F(2))) == 4


@settings(max_examples=60, deadline=None)
@given(signatures, st.data())
def test_bialternant_matches_combinatorial(nu, data):
    u = data.draw(
        st.lists(points, min_size=len(nu), max_size=len(nu), unique=True)
    )
    assert schur_bialternant(nu, u) == schur_combinatorial(nu, u)


@settings(max_examples=60, deadline=None)
@given(signatures, st.data())
def test_jacobi_trudi_matches_combinatorial(nu, data):
    kappa = data.draw(
        st.lists(st.integers(-2, 2), min_size=0, max_size=len(nu)).map(
            lambda xs: tuple(sorted(xs, reverse=True))
        )
    )
    u = data.draw(
        st.lists(points, min_size=len(nu) - len(kappa), max_size=len(nu) - len(kappa))
    )
    want = skew_schur_combinatorial(nu, kappa, u)
    assert skew_schur_jacobi_trudi(nu, kappa, u) == want


def test_skew_one_variable_routes_agree():
    u = F(3, 2)
    for nu in [(2, 1, 0), (2, 0, -1), (1, 1, 1)]:
        for a in range(-2, 3):
            for b in range(-2, a + 1):
                kappa = (a, b)
                closed = skew_schur_one_variable(nu, kappa, u)
                assert skew_schur_one_variable_det(nu, kappa, u) == closed
                assert closed == skew_schur_combinatorial(nu, kappa, (u,))


def test_skew_one_variable_values():
    assert skew_schur_one_variable((2, 0), (1,), F(2)) == 2  # 2^{2-1}
    assert skew_schur_one_variable((2, 0), (3,), F(2)) == 0  # no interlacing
    with pytest.raises(ValueError):
        skew_schur_one_variable((2, 1, 0), (1,), F(2))


def test_branching_over_one_row():
    # adding one evaluation point sums the one-step weights over middle rows
    nu, u, t = (2, 1, 0), (F(2), F(3)), F(5)
    total = sum(
        skew_schur_one_variable(nu, (a, b), t) * schur_combinatorial((a, b), u)
        for a in range(0, 3)
        for b in range(0, a + 1)
    )
    assert schur_combinatorial(nu, u + (t,)) == total


def test_h_at_q_powers_matches_complete_sym():
    for q in (F(1, 2), F(2, 3)):
        for exps in [(0,), (0, 1), (0, 1, 2), (2, 0, -1)]:
            pts = tuple(q**j for j in exps)
            for m in range(0, 6):
                assert h_at_q_powers(m, exps, q) == complete_sym(m, pts)
    assert h_at_q_powers(-1, (0, 1), F(1, 2)) == 0
    assert h_at_q_powers(0, (), F(1, 2)) == 1


def test_h_at_q_powers_validation():
    with pytest.raises(ValueError):
        h_at_q_powers(2, (0, 0), F(1, 2))
    with pytest.raises(ValueError):
        h_at_q_powers(2, (0, 1), F(1))
