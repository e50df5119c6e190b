"""The three determinantal routes for relative counts, against enumeration."""

from fractions import Fraction as F

import pytest

from gtkit.patterns import all_signatures, dim_product, rel_dim_oracle, support_box
from gtkit.reldim import (
    A_coeff,
    A_matrix,
    DetContext,
    H_star,
    LinkRow,
    PoleError,
    bo_coefficient,
    bo_transform,
    link_row,
    psi_coeff,
    rel_dim_ratio,
    rel_dim_ratio_first,
)


def test_context_validation():
    ctx = DetContext(1, (2, 1, 0))
    assert ctx.N == 3
    assert ctx.nodes() == (1, -1, -3)
    with pytest.raises(ValueError):
        DetContext(3, (2, 1, 0))
    with pytest.raises(ValueError):
        DetContext(0, (2, 1, 0))
    with pytest.raises(ValueError):
        DetContext(1, (0, 1))


def test_h_star_values():
    assert H_star(1, (1, 0)) == 2
    assert H_star(-1, (1, 0)) == 0  # zero of the z+1 factor
    with pytest.raises(PoleError):
        H_star(0, (1, 0))  # z + 1 - nu_1 vanishes


def test_a_coeff_frozen_value():
    # K=1, nu=(1,0): A_1(-1) = 1/2 and the ratio for kappa=(0) is det[[1/2]]
    ctx = DetContext(1, (1, 0))
    assert A_coeff(ctx, 1, -1) == F(1, 2)
    assert rel_dim_ratio(ctx, (0,)) == F(1, 2)
    with pytest.raises(ValueError):
        A_coeff(ctx, 2, 0)


def test_ratio_matches_enumeration_spot():
    nu = (2, 1, 0)
    dim_nu = dim_product(nu)
    for K in (1, 2):
        ctx = DetContext(K, nu)
        for kappa in support_box(nu, K):
            want = F(rel_dim_oracle(kappa, nu), dim_nu)
            assert rel_dim_ratio(ctx, kappa) == want, kappa


def test_three_routes_agree():
    # residue-sum, inverse-Vandermonde, and division-based coefficients
    for nu in [(2, 1, 0), (2, 0, -1), (3, 1, 0, -2)]:
        for K in range(1, len(nu)):
            ctx = DetContext(K, nu)
            for kappa in support_box(nu, K):
                a = rel_dim_ratio(ctx, kappa)
                assert rel_dim_ratio_first(ctx, kappa) == a, (nu, K, kappa)
            for i in range(1, K + 1):
                for x in range(nu[-1] - K, nu[0] + 1):
                    assert bo_coefficient(ctx, i, x) == A_coeff(ctx, i, x)


def test_a_matrix_shape_and_validation():
    ctx = DetContext(2, (2, 1, 0))
    m = A_matrix(ctx, (1, 0))
    assert m.shape == (2, 2)
    with pytest.raises(ValueError):
        A_matrix(ctx, (1,))


def test_psi_coeff_full_index_range():
    ctx = DetContext(2, (2, 1, 0))
    for i in range(1, 4):
        psi_coeff(ctx, i, 0)  # defined up to N, not just K
    with pytest.raises(ValueError):
        psi_coeff(ctx, 4, 0)


def test_bo_transform_is_kronecker_delta():
    for n in range(2, 6):
        for k in range(1, n):
            for i in range(1, k + 1):
                for p in range(1, k + 1):
                    assert bo_transform(n, k, i, p) == (1 if p == i else 0)
    with pytest.raises(ValueError):
        bo_transform(2, 2, 1, 1)


def test_link_row_frozen_example():
    row = link_row((1, 0), 1)
    assert dict(row.items()) == {(0,): F(1, 2), (1,): F(1, 2)}
    assert row[(0,)] == F(1, 2)
    assert row[(5,)] == 0
    assert len(row) == 2


def test_link_row_mass_and_nonnegativity():
    for nu in [(2, 1, 0), (2, 0, -1), (1, 1, 0, 0)]:
        for K in range(1, len(nu)):
            row = link_row(nu, K)
            assert sum(row.weights.values()) == 1
            assert all(w > 0 for w in row.weights.values())
            support = {k for k in all_signatures(K, nu[-1], nu[0]) if rel_dim_oracle(k, nu) > 0}
            assert set(row.weights) == support


def test_linkrow_validation():
    with pytest.raises(ValueError, match="sum to 1"):
        LinkRow((1, 0), 1, {(0,): F(1, 2)})
    with pytest.raises(ValueError, match="negative"):
        LinkRow((1, 0), 1, {(0,): F(3, 2), (1,): F(-1, 2)})
    with pytest.raises(ValueError, match="length K"):
        LinkRow((1, 0), 1, {(0, 0): F(1)})
    # zero weights are dropped, not stored
    row = LinkRow((1, 0), 1, {(0,): F(1), (1,): F(0)})
    assert dict(row.items()) == {(0,): F(1)}
