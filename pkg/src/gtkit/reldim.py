"""Determinantal formulas for relative trapezoid counts and link rows.

The ratio (number of trapezoids with bottom kappa, top nu) / (number of
triangular patterns with top nu) is computed as a K x K determinant of
coefficients A_i(x). Each coefficient is a contour integral around the
particle positions nu_j - j, evaluated here as an exact finite residue sum.
Three independent routes are provided and cross-checked: the residue sum
with symbolically cancelled polynomial part, an inverse-Vandermonde route,
and a biorthogonal-expansion route realized via exact polynomial division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import (
    Rat,
    RatLike,
    RatMatrix,
    det,
    pochhammer,
    poly_div_exact,
    poly_eval,
    poly_mul,
    poly_rising,
    vandermonde_inverse,
)
from .patterns import Signature, check_signature, dim_product, support_box

__all__ = [
    "PoleError",
    "DetContext",
    "H_star",
    "A_coeff",
    "A_matrix",
    "rel_dim_ratio",
    "psi_coeff",
    "rel_dim_ratio_first",
    "bo_coefficient",
    "bo_transform",
    "LinkRow",
    "link_row",
]


class PoleError(ArithmeticError):
    """Evaluation at a pole of a rational expression."""


@dataclass(frozen=True)
class DetContext:
    """Fixed data for one trapezoid family: bottom length K, top row nu."""

    K: int
    nu: Signature

    def __post_init__(self):
        object.__setattr__(self, "nu", check_signature(self.nu))
        if not 1 <= self.K < len(self.nu):
            raise ValueError("need 1 <= K < N")

    @property
    def N(self) -> int:
        return len(self.nu)

    def nodes(self) -> tuple[int, ...]:
        """Particle positions nu_j - j, strictly decreasing."""
        return tuple(v - j for j, v in enumerate(self.nu, start=1))


def H_star(z: RatLike, nu: Sequence[int]) -> Rat:
    """prod_r (z + r) / (z + r - nu_r), the generating function of nu."""
    nu = check_signature(nu)
    z = Fraction(z)
    out = Fraction(1)
    for r, part in enumerate(nu, start=1):
        denom = z + r - part
        if denom == 0:
            raise PoleError(f"z = {z} is the pole at position r = {r}")
        out *= (z + r) / denom
    return out


def _poly_part(ctx: DetContext, i: int, y: Rat) -> Rat:
    """(y+1)_N / (y+i)_{N-K+1} with the common index ranges cancelled
    symbolically: prod_{r<i} (y+r) * prod_{r>N-K+i} (y+r). Never divides,
    so y colliding with -i..-(N-K+i) is harmless."""
    n, k = ctx.N, ctx.K
    out = Fraction(1)
    for r in range(1, i):
        out *= y + r
    for r in range(n - k + i + 1, n + 1):
        out *= y + r
    return out


@lru_cache(maxsize=1 << 18)
def A_coeff(ctx: DetContext, i: int, x: int) -> Rat:
    """Residue sum for the i-th coefficient at shifted position x.

    Simple poles sit at the particle positions a_j = nu_j - j; the contour
    picks up exactly those with a_j >= x.

    Cached: verification sweeps request the same (ctx, i, x) for every
    bottom row sharing a shifted coordinate.
    """
    if not 1 <= i <= ctx.K:
        raise ValueError("coefficient index out of range")
    n, k = ctx.N, ctx.K
    nodes = ctx.nodes()
    total = Fraction(0)
    for j, aj in enumerate(nodes):
        if aj < x:
            break  # nodes are decreasing
        denom = 1
        for r, ar in enumerate(nodes):
            if r != j:
                denom *= aj - ar
        total += pochhammer(aj - x + 1, n - k - 1) * _poly_part(ctx, i, Fraction(aj)) / denom
    return (n - k) * total


def A_matrix(ctx: DetContext, kappa: Sequence[int]) -> RatMatrix:
    kappa = check_signature(kappa)
    if len(kappa) != ctx.K:
        raise ValueError("bottom row must have length K")
    return RatMatrix(
        [[A_coeff(ctx, i, kappa[j - 1] - j) for j in range(1, ctx.K + 1)] for i in range(1, ctx.K + 1)]
    )


def rel_dim_ratio(ctx: DetContext, kappa: Sequence[int]) -> Rat:
    """(trapezoid count) / (triangular count) as det[A_i(kappa_j - j)]."""
    return A_matrix(ctx, kappa).det()


# ---------------------------------------------------------------------------
# first determinantal route: inverse Vandermonde at the particle positions

_inverse_cache: dict = {}


def _nodes_inverse(nu: Signature) -> RatMatrix:
    if nu not in _inverse_cache:
        nodes = tuple(v - j for j, v in enumerate(nu, start=1))
        _inverse_cache[nu] = vandermonde_inverse(nodes)
    return _inverse_cache[nu]


def psi_coeff(ctx: DetContext, i: int, x: int) -> Rat:
    """sum_j 1[a_j >= x] (a_j - x + 1)_{N-K-1} / (N-K-1)! * [V^{-1}]_{ij}
    over the particle positions; defined for all 1 <= i <= N."""
    n, k = ctx.N, ctx.K
    if not 1 <= i <= n:
        raise ValueError("row index out of range")
    inv = _nodes_inverse(ctx.nu)
    fact = math.factorial(n - k - 1)
    total = Fraction(0)
    for j, aj in enumerate(ctx.nodes()):
        if aj < x:
            break
        total += pochhammer(aj - x + 1, n - k - 1) * inv[i - 1, j] / fact
    return total


def rel_dim_ratio_first(ctx: DetContext, kappa: Sequence[int]) -> Rat:
    """Same ratio via (N-1)! ... (N-K)! det[psi_i(kappa_j - j)]."""
    kappa = check_signature(kappa)
    if len(kappa) != ctx.K:
        raise ValueError("bottom row must have length K")
    n, k = ctx.N, ctx.K
    factor = 1
    for m in range(n - k, n):
        factor *= math.factorial(m)
    matrix = [
        [psi_coeff(ctx, i, kappa[j - 1] - j) for j in range(1, k + 1)] for i in range(1, k + 1)
    ]
    return factor * det(matrix)


# ---------------------------------------------------------------------------
# biorthogonal route


def bo_coefficient(ctx: DetContext, i: int, x: int) -> Rat:
    """Expansion coefficient of the generating function of nu in the shifted
    rational basis attached to (i, x).

    Same pole set as A_coeff, but the polynomial part is produced by exact
    polynomial long division instead of index-range cancellation, so the two
    routes are computationally independent.
    """
    if not 1 <= i <= ctx.K:
        raise ValueError("coefficient index out of range")
    n, k = ctx.N, ctx.K
    numerator = poly_mul(
        poly_rising(Fraction(1 - x), n - k - 1),
        poly_div_exact(poly_rising(1, n), poly_rising(i, n - k + 1)),
    )
    nodes = ctx.nodes()
    total = Fraction(0)
    for j, aj in enumerate(nodes):
        if aj < x:
            break
        denom = 1
        for r, ar in enumerate(nodes):
            if r != j:
                denom *= aj - ar
        total += poly_eval(numerator, Fraction(aj)) / denom
    return (n - k) * total


def bo_transform(N: int, K: int, i: int, p: int) -> Rat:
    """Residue transform of the (i, x)-basis function with shift index p;
    equals 1 when p = i and 0 otherwise (biorthogonality)."""
    if not 1 <= K < N:
        raise ValueError("need 1 <= K < N")
    m = N - K
    total = Fraction(0)
    for s in range(0, min(m, p - i) + 1):
        total += (
            Fraction((-1) ** s)
            * pochhammer(p - i - s + 1, m - 1)
            / (math.factorial(s) * math.factorial(m - s))
        )
    return m * total


# ---------------------------------------------------------------------------
# link rows


class LinkRow:
    """One row of a link: nonnegative weights over bottom rows, summing to 1."""

    def __init__(self, top: Signature, K: int, weights: dict):
        self.top = check_signature(top)
        self.K = K
        clean = {}
        total = Fraction(0)
        for kappa, w in weights.items():
            kappa = check_signature(kappa)
            if len(kappa) != K:
                raise ValueError("support entries must have length K")
            w = Fraction(w)
            if w < 0:
                raise ValueError(f"negative link weight at {kappa}: {w}")
            total += w
            if w != 0:
                clean[kappa] = w
        if total != 1:
            raise ValueError(f"link weights must sum to 1 exactly, got {total}")
        self.weights: dict = dict(sorted(clean.items()))

    def __getitem__(self, kappa) -> Rat:
        return self.weights.get(check_signature(kappa), Fraction(0))

    def items(self):
        return self.weights.items()

    def __len__(self) -> int:
        return len(self.weights)

    def __repr__(self) -> str:
        return f"LinkRow(top={self.top}, K={self.K}, {len(self.weights)} entries)"


def link_row(nu: Sequence[int], K: int) -> LinkRow:
    """Markov-kernel row nu -> {kappa}: (triangular count of kappa) times the
    relative-dimension ratio, over the support box."""
    nu = check_signature(nu)
    ctx = DetContext(K, nu)
    weights = {}
    for kappa in support_box(nu, K):
        value = dim_product(kappa) * rel_dim_ratio(ctx, kappa)
        if value != 0:
            weights[kappa] = value
    return LinkRow(nu, K, weights)
