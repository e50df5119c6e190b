"""Rational Schur polynomials of integer signatures, by three routes.

Signatures may have negative parts, so these are Laurent-type Schur
polynomials: evaluation points must be nonzero. The bialternant route needs
pairwise distinct points; the combinatorial route (a weighted walk over
interlacing patterns) works for any nonzero points and is the oracle the
determinantal identities are tested against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Rat, RatLike, complete_sym, det, vandermonde_det
from .patterns import (
    _ascend,
    _resolve_budget,
    check_signature,
    interlaces,
)

__all__ = [
    "RepeatedPointsError",
    "VIRTUAL",
    "schur_bialternant",
    "schur_combinatorial",
    "schur_value",
    "skew_schur_combinatorial",
    "skew_schur_one_variable",
    "skew_schur_one_variable_det",
    "skew_schur_jacobi_trudi",
    "xi_weight",
    "h_at_q_powers",
]


class RepeatedPointsError(ValueError):
    """Bialternant evaluation at repeated points; use the combinatorial route."""


def _check_points(vals: Sequence[RatLike]) -> tuple[Rat, ...]:
    out = tuple(Fraction(v) for v in vals)
    if any(v == 0 for v in out):
        raise ValueError("evaluation points must be nonzero (Laurent powers)")
    return out


def schur_bialternant(nu: Sequence[int], vals: Sequence[RatLike]) -> Rat:
    """det[u_i^{nu_j + N - j}] / det[u_i^{N - j}] at pairwise distinct points."""
    nu = check_signature(nu)
    u = _check_points(vals)
    n = len(nu)
    if len(u) != n:
        raise ValueError("need exactly one evaluation point per part")
    if n == 0:
        return Fraction(1)
    if len(set(u)) != n:
        raise RepeatedPointsError(
            "points must be pairwise distinct; use schur_combinatorial"
        )
    num = det([[u[i] ** (nu[j] + n - 1 - j) for j in range(n)] for i in range(n)])
    return num / vandermonde_det(u)


def skew_schur_combinatorial(
    nu: Sequence[int],
    kappa: Sequence[int],
    vals: Sequence[RatLike],
    budget: int | None = None,
) -> Rat:
    """Sum over interlacing chains from kappa up to nu of
    prod_m vals_m^(row-sum increment at step m)."""
    nu = check_signature(nu)
    kappa = check_signature(kappa)
    u = _check_points(vals)
    n, k = len(nu), len(kappa)
    if len(u) != n - k:
        raise ValueError("need one evaluation point per added row")
    if k == n:
        return Fraction(1) if kappa == nu else Fraction(0)
    b = _resolve_budget(budget)
    total = Fraction(0)
    base = sum(kappa)
    for chain in _ascend(kappa, nu, k, b):
        weight = Fraction(1)
        prev = base
        for m, row in enumerate(chain):
            s = sum(row)
            weight *= u[m] ** (s - prev)
            prev = s
        total += weight
    return total


def schur_combinatorial(nu: Sequence[int], vals: Sequence[RatLike], budget: int | None = None) -> Rat:
    return skew_schur_combinatorial(nu, (), vals, budget)


def schur_value(nu: Sequence[int], vals: Sequence[RatLike], budget: int | None = None) -> Rat:
    """Dispatch: bialternant at distinct points, combinatorial otherwise."""
    u = _check_points(vals)
    if len(set(u)) == len(u):
        return schur_bialternant(nu, u)
    return schur_combinatorial(nu, u, budget)


def skew_schur_one_variable(nu: Sequence[int], kappa: Sequence[int], u: RatLike) -> Rat:
    """One-step skew value: u^{|nu| - |kappa|} when the rows interlace, else 0."""
    nu = check_signature(nu)
    kappa = check_signature(kappa)
    (u,) = _check_points([u])
    if len(nu) != len(kappa) + 1:
        raise ValueError("top row must be one longer than bottom row")
    if not interlaces(kappa, nu):
        return Fraction(0)
    return u ** (sum(nu) - sum(kappa))


VIRTUAL = object()  # placeholder particle for the shorter row


def xi_weight(u: RatLike, x, y: int) -> Rat:
    """One-particle transition weight: u^{y-x} for x <= y, u^y from the
    virtual particle, else 0."""
    (u,) = _check_points([u])
    if x is VIRTUAL:
        return u**y
    if x <= y:
        return u ** (y - x)
    return Fraction(0)


def skew_schur_one_variable_det(nu: Sequence[int], kappa: Sequence[int], u: RatLike) -> Rat:
    """One-step skew value as u^N det[xi_u(x_i, y_j)] over shifted particle
    positions x_i = kappa_i - i (plus one virtual particle) and y_j = nu_j - j."""
    nu = check_signature(nu)
    kappa = check_signature(kappa)
    (u,) = _check_points([u])
    n = len(nu)
    if n != len(kappa) + 1:
        raise ValueError("top row must be one longer than bottom row")
    xs = [kappa[i] - (i + 1) for i in range(n - 1)] + [VIRTUAL]
    ys = [nu[j] - (j + 1) for j in range(n)]
    matrix = [[xi_weight(u, x, y) for y in ys] for x in xs]
    return u**n * det(matrix)


def skew_schur_jacobi_trudi(
    nu: Sequence[int], kappa: Sequence[int], vals: Sequence[RatLike]
) -> Rat:
    """Dual Jacobi-Trudi determinant det[h_{nu_i - kappa_j + j - i}].

    Stated for nonnegative parts, so both signatures are shifted up by a
    common c >= 0 first and the result is divided by (prod vals)^c, the
    exact scaling of a skew Schur polynomial under a simultaneous shift.
    """
    nu = check_signature(nu)
    kappa = check_signature(kappa)
    u = _check_points(vals)
    n, k = len(nu), len(kappa)
    if len(u) != n - k:
        raise ValueError("need one evaluation point per added row")
    if k > n:
        raise ValueError("bottom row longer than top row")
    shift = max(0, -(nu[-1] if nu else 0), -(kappa[-1] if kappa else 0))
    nup = [x + shift for x in nu]
    kap = [x + shift for x in kappa] + [0] * (n - k)
    hs: dict[int, Rat] = {}

    def h(m: int) -> Rat:
        if m not in hs:
            hs[m] = complete_sym(m, u)
        return hs[m]

    value = det([[h(nup[i] - kap[j] + (j + 1) - (i + 1)) for j in range(n)] for i in range(n)])
    if shift:
        scale = Fraction(1)
        for v in u:
            scale *= v
        value /= scale**shift
    return value


def h_at_q_powers(m: int, exponents: Sequence[int], q: RatLike) -> Rat:
    """Closed form for h_m(q^{j_1}, ..., q^{j_l}) at distinct integer
    exponents: sum_k q^{j_k m} / prod_{r != k} (1 - q^{j_r - j_k})."""
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("q must be positive and distinct from 1")
    js = [int(j) for j in exponents]
    if len(set(js)) != len(js):
        raise ValueError("exponents must be distinct")
    if m < 0:
        return Fraction(0)
    if not js:
        return Fraction(1) if m == 0 else Fraction(0)
    total = Fraction(0)
    for k, jk in enumerate(js):
        denom = Fraction(1)
        for r, jr in enumerate(js):
            if r != k:
                denom *= 1 - q ** (jr - jk)
        total += q ** (jk * m) / denom
    return total
