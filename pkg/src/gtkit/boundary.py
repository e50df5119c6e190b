"""Boundary points, their generating functions, and minor-determinant links.

A boundary point omega is a pair of coordinate lists (alpha, beta, one pair
per direction) plus drift terms gamma; its generating function Phi(u; omega)
is holomorphic in an annulus around the unit circle and normalized by
Phi(1) = 1. Laurent coefficients phi_n come out exactly (partial fractions,
available when gamma = 0 and the alphas within each direction are distinct)
or numerically (unit-circle quadrature with doubling). Links to level K are
minor determinants of the coefficient sequence.

The embedding of a finite top row nu into the boundary coordinates uses
half-integer-shifted Frobenius-type coordinates divided by N; the drift of
an embedded point is always exactly zero, so embedded points always support
exact mode.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .linalg import Rat, RatMatrix, poly_coeff, poly_divmod, poly_eval, poly_mul
from .patterns import check_signature, dim_product
from .reldim import DetContext, PoleError, rel_dim_ratio

__all__ = [
    "OmegaPoint",
    "LaurentWindow",
    "phi_eval",
    "phi_coeffs",
    "phi_signature",
    "link_infinity",
    "embed",
    "R_kernel",
    "a_coeff_quadrature",
    "uat_gap",
]


def _check_coord_list(values, name: str) -> tuple[Rat, ...]:
    out = tuple(Fraction(v) for v in values)
    for v in out:
        if v < 0:
            raise ValueError(f"{name} entries must be >= 0")
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"{name} must be nonincreasing")
    return out


@dataclass(frozen=True)
class OmegaPoint:
    alpha_plus: tuple = ()
    beta_plus: tuple = ()
    alpha_minus: tuple = ()
    beta_minus: tuple = ()
    gamma_plus: Rat = Fraction(0)
    gamma_minus: Rat = Fraction(0)

    def __post_init__(self):
        for name in ("alpha_plus", "beta_plus", "alpha_minus", "beta_minus"):
            object.__setattr__(self, name, _check_coord_list(getattr(self, name), name))
        for name in ("gamma_plus", "gamma_minus"):
            value = Fraction(getattr(self, name))
            if value < 0:
                raise ValueError(f"{name} must be >= 0")
            object.__setattr__(self, name, value)
        b_plus = self.beta_plus[0] if self.beta_plus else Fraction(0)
        b_minus = self.beta_minus[0] if self.beta_minus else Fraction(0)
        if b_plus + b_minus > 1:
            raise ValueError("beta_plus[0] + beta_minus[0] must be <= 1")

    @property
    def delta_plus(self) -> Rat:
        return self.gamma_plus + sum(self.alpha_plus) + sum(self.beta_plus)

    @property
    def delta_minus(self) -> Rat:
        return self.gamma_minus + sum(self.alpha_minus) + sum(self.beta_minus)

    def to_json(self) -> str:
        def enc(v):
            return str(Fraction(v))

        payload = {
            "alpha_plus": [enc(v) for v in self.alpha_plus],
            "beta_plus": [enc(v) for v in self.beta_plus],
            "alpha_minus": [enc(v) for v in self.alpha_minus],
            "beta_minus": [enc(v) for v in self.beta_minus],
            "gamma_plus": enc(self.gamma_plus),
            "gamma_minus": enc(self.gamma_minus),
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "OmegaPoint":
        data = json.loads(text)
        return cls(
            alpha_plus=tuple(Fraction(v) for v in data.get("alpha_plus", [])),
            beta_plus=tuple(Fraction(v) for v in data.get("beta_plus", [])),
            alpha_minus=tuple(Fraction(v) for v in data.get("alpha_minus", [])),
            beta_minus=tuple(Fraction(v) for v in data.get("beta_minus", [])),
            gamma_plus=Fraction(data.get("gamma_plus", 0)),
            gamma_minus=Fraction(data.get("gamma_minus", 0)),
        )


# ---------------------------------------------------------------------------
# evaluation


def phi_eval(omega: OmegaPoint, u):
    """Phi(u; omega). Exact for rational u when both drifts vanish; complex
    or float input switches to floating point."""
    exact = isinstance(u, (int, Fraction)) and omega.gamma_plus == 0 and omega.gamma_minus == 0
    if exact:
        u = Fraction(u)
        if u == 0:
            raise PoleError("u = 0 is an essential singularity direction")
        out = Fraction(1)
    else:
        u = complex(u)
        if u == 0:
            raise PoleError("u = 0 is an essential singularity direction")
        out = cmath.exp(
            complex(omega.gamma_plus) * (u - 1) + complex(omega.gamma_minus) * (1 / u - 1)
        )
    for b in omega.beta_plus:
        out *= 1 + _cast(b, exact) * (u - 1)
    for b in omega.beta_minus:
        out *= 1 + _cast(b, exact) * (1 / u - 1)
    for a in omega.alpha_plus:
        denom = 1 - _cast(a, exact) * (u - 1)
        if exact and denom == 0:
            raise PoleError(f"u = {u} is the pole of the alpha_plus = {a} factor")
        out /= denom
    for a in omega.alpha_minus:
        denom = 1 - _cast(a, exact) * (1 / u - 1)
        if exact and denom == 0:
            raise PoleError(f"u = {u} is the pole of the alpha_minus = {a} factor")
        out /= denom
    return out


def _cast(v: Rat, exact: bool):
    return v if exact else float(v)


# ---------------------------------------------------------------------------
# exact Laurent coefficients via partial fractions


def _rational_form(omega: OmegaPoint):
    """Phi(u) = u^shift * N(u) / D(u) with polynomial N, D; also returns the
    poles of D split into (inside unit circle, outside)."""
    if omega.gamma_plus != 0 or omega.gamma_minus != 0:
        raise ValueError("exact coefficients need gamma_plus = gamma_minus = 0; use numeric mode")
    ap = [a for a in omega.alpha_plus if a > 0]
    am = [a for a in omega.alpha_minus if a > 0]
    if len(set(ap)) != len(ap) or len(set(am)) != len(am):
        raise ValueError("exact coefficients need distinct alphas; use numeric mode")
    bp = [b for b in omega.beta_plus if b > 0]
    bm = [b for b in omega.beta_minus if b > 0]
    num: tuple = (Fraction(1),)
    for b in bp:
        num = poly_mul(num, (1 - b, b))
    for b in bm:
        num = poly_mul(num, (b, 1 - b))
    den: tuple = (Fraction(1),)
    outside = []
    inside = []
    for a in ap:
        den = poly_mul(den, (1 + a, -a))
        outside.append((1 + a) / a)
    for a in am:
        den = poly_mul(den, (-a, 1 + a))
        inside.append(a / (1 + a))
    shift = len(am) - len(bm)
    return shift, num, den, inside, outside


def _partial_fractions(num, den, inside, outside):
    quot, rem = poly_divmod(num, den)
    residues = {}
    lead = den[-1]
    for root in inside + outside:
        dval = Fraction(1)
        for other in inside + outside:
            if other != root:
                dval *= root - other
        # derivative of den = lead * prod (u - root) at a simple root
        residues[root] = poly_eval(rem, root) / (lead * dval) if rem else Fraction(0)
    return quot, residues


def _exact_coeff(shift, quot, residues, inside, outside, n: int) -> Rat:
    k = n - shift
    out = poly_coeff(quot, k)
    if k >= 0:
        for p in outside:
            out -= residues[p] * p ** (-k - 1)
    else:
        for r in inside:
            out += residues[r] * r ** (-k - 1)
    return out


@dataclass
class LaurentWindow:
    """Coefficients phi_n for n_min <= n <= n_max, with provenance."""

    n_min: int
    n_max: int
    coeffs: dict
    mode: str
    tolerance: float | None = None

    def __getitem__(self, n: int):
        if not self.n_min <= n <= self.n_max:
            raise KeyError(f"n = {n} outside window [{self.n_min}, {self.n_max}]")
        return self.coeffs[n]


def phi_coeffs(
    omega: OmegaPoint,
    n_min: int,
    n_max: int,
    mode: str = "exact",
    tolerance: float = 1e-10,
    max_points: int = 1 << 16,
) -> LaurentWindow:
    """Laurent coefficients of Phi on [n_min, n_max]."""
    if n_min > n_max:
        raise ValueError("empty window")
    if mode == "exact":
        shift, num, den, inside, outside = _rational_form(omega)
        quot, residues = _partial_fractions(num, den, inside, outside)
        coeffs = {
            n: _exact_coeff(shift, quot, residues, inside, outside, n)
            for n in range(n_min, n_max + 1)
        }
        return LaurentWindow(n_min, n_max, coeffs, "exact", None)
    if mode != "numeric":
        raise ValueError("mode must be 'exact' or 'numeric'")
    m = 64
    prev = None
    while m <= max_points:
        theta = 2 * np.pi * (np.arange(m) + 0.5) / m
        us = np.exp(1j * theta)
        vals = _phi_complex(omega, us)
        current = {
            n: complex(np.mean(vals * us ** (-n))).real for n in range(n_min, n_max + 1)
        }
        if prev is not None:
            gap = max(abs(current[n] - prev[n]) for n in current)
            if gap < tolerance:
                return LaurentWindow(n_min, n_max, current, "numeric", tolerance)
        prev = current
        m *= 2
    raise RuntimeError("quadrature did not converge; raise max_points or tolerance")


def _phi_complex(omega: OmegaPoint, us: np.ndarray) -> np.ndarray:
    out = np.exp(
        float(omega.gamma_plus) * (us - 1) + float(omega.gamma_minus) * (1 / us - 1)
    )
    for b in omega.beta_plus:
        out = out * (1 + float(b) * (us - 1))
    for b in omega.beta_minus:
        out = out * (1 + float(b) * (1 / us - 1))
    for a in omega.alpha_plus:
        out = out / (1 - float(a) * (us - 1))
    for a in omega.alpha_minus:
        out = out / (1 - float(a) * (1 / us - 1))
    return out


def phi_signature(
    omega: OmegaPoint,
    sig: Sequence[int],
    mode: str = "exact",
    tolerance: float = 1e-10,
):
    """Minor determinant det[phi_{sig_i - i + j}] of the coefficient sequence."""
    sig = check_signature(sig)
    n = len(sig)
    if n == 0:
        return Fraction(1) if mode == "exact" else 1.0
    lo = min(sig[i] - (i + 1) + 1 for i in range(n))
    hi = max(sig[i] - (i + 1) + n for i in range(n))
    window = phi_coeffs(omega, lo, hi, mode=mode, tolerance=tolerance)
    entries = [[window[sig[i] - (i + 1) + (j + 1)] for j in range(n)] for i in range(n)]
    if mode == "exact":
        return RatMatrix(entries).det()
    return float(np.linalg.det(np.array(entries, dtype=float)))


def link_infinity(
    omega: OmegaPoint,
    kappa: Sequence[int],
    mode: str = "exact",
    tolerance: float = 1e-10,
):
    """Boundary link weight to bottom row kappa: (triangular count) times the
    minor determinant of the coefficient sequence."""
    kappa = check_signature(kappa)
    return dim_product(kappa) * phi_signature(omega, kappa, mode=mode, tolerance=tolerance)


# ---------------------------------------------------------------------------
# embedding of finite rows


def _transpose(partition: Sequence[int]) -> tuple:
    if not partition:
        return ()
    return tuple(
        sum(1 for p in partition if p >= i) for i in range(1, partition[0] + 1)
    )


def embed(nu: Sequence[int]) -> OmegaPoint:
    """Coordinates of a finite top row inside the boundary parameter space:
    row/column half-shifted coordinates of the positive and negative parts,
    each divided by N and clamped at zero."""
    nu = check_signature(nu)
    n = len(nu)
    if n == 0:
        raise ValueError("need a nonempty top row")
    pos = tuple(v for v in nu if v > 0)
    neg = tuple(sorted((-v for v in nu if v < 0), reverse=True))

    def coords(diagram):
        alpha = []
        for i, part in enumerate(diagram, start=1):
            if part - i < 0:
                break
            alpha.append(Fraction(2 * (part - i) + 1, 2 * n))
        beta = []
        for i, col in enumerate(_transpose(diagram), start=1):
            if col - i < 0:
                break
            beta.append(Fraction(2 * (col - i) + 1, 2 * n))
        return tuple(alpha), tuple(beta)

    a_plus, b_plus = coords(pos)
    a_minus, b_minus = coords(neg)
    return OmegaPoint(
        alpha_plus=a_plus,
        beta_plus=b_plus,
        alpha_minus=a_minus,
        beta_minus=b_minus,
    )


# ---------------------------------------------------------------------------
# unit-circle representation of the finite coefficients


def R_kernel(N: int, K: int, x: int, i: int, u):
    """Kernel whose pairing with Phi(.; embed(nu)) over the unit circle gives
    the finite coefficient A_i(x); tends to u^{-(x+i)} as N grows."""
    if u == 1:
        raise PoleError("u = 1 is the singular direction of the kernel")
    y = N / (u - 1)
    out = N * (N - K) * u / (u - 1) ** 2
    for s in range(N - K - 1):
        out *= (y - x + Fraction(1, 2) + s) / (y + i - Fraction(1, 2) + s)
    out /= (y + i - Fraction(1, 2) + (N - K - 1)) * (y + i - Fraction(1, 2) + (N - K))
    return out


def a_coeff_quadrature(
    nu: Sequence[int],
    K: int,
    i: int,
    x: int,
    tolerance: float = 1e-10,
    max_points: int = 1 << 16,
) -> float:
    """A_i(x) recovered as the mean of Phi(u; embed(nu)) R(u) over the unit
    circle, quadrature points doubled until stable. Needs N > K + x + 1."""
    nu = check_signature(nu)
    n = len(nu)
    if not n > K + x + 1:
        raise ValueError("representation requires N > K + x + 1")
    omega = embed(nu)
    m = 64
    prev = None
    while m <= max_points:
        theta = 2 * np.pi * (np.arange(m) + 0.5) / m
        us = np.exp(1j * theta)
        vals = _phi_complex(omega, us) * _r_kernel_complex(n, K, x, i, us)
        current = complex(np.mean(vals)).real
        if prev is not None and abs(current - prev) < tolerance:
            return current
        prev = current
        m *= 2
    raise RuntimeError("quadrature did not converge; raise max_points or tolerance")


def _r_kernel_complex(N: int, K: int, x: int, i: int, us: np.ndarray) -> np.ndarray:
    y = N / (us - 1)
    out = N * (N - K) * us / (us - 1) ** 2
    for s in range(N - K - 1):
        out = out * (y - x + 0.5 + s) / (y + i - 0.5 + s)
    out = out / ((y + i - 0.5 + (N - K - 1)) * (y + i - 0.5 + (N - K)))
    return out


# ---------------------------------------------------------------------------
# approximation gap


def uat_gap(
    nu: Sequence[int],
    kappa: Sequence[int],
    mode: str = "exact",
    tolerance: float = 1e-10,
):
    """|finite link weight - boundary link weight at the embedded point|.

    Exact mode returns a rational; numeric mode recomputes the boundary side
    by quadrature (the finite side stays exact) and returns a float.
    """
    nu = check_signature(nu)
    kappa = check_signature(kappa)
    ctx = DetContext(len(kappa), nu)
    finite = dim_product(kappa) * rel_dim_ratio(ctx, kappa)
    limit = link_infinity(embed(nu), kappa, mode=mode, tolerance=tolerance)
    if mode == "exact":
        return abs(finite - limit)
    return abs(float(finite) - limit)
