"""q-weighted trapezoid counts by determinantal formulas (finite top row).

The measure weights a pattern by q^volume. The ratio of the q-weighted
trapezoid count to the q-weighted triangular count is again a K x K
determinant of residue sums qA_i(x), with an explicit sign/power prefactor.
A second, more general family evaluates skew Schur polynomials at an
arbitrary subset q^T of the geometric point set via inverse-Vandermonde
sums psi^T, and reduces to the first when T = {0, ..., N-K-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import Rat, RatLike, RatMatrix, q_pochhammer, vandermonde_inverse
from .patterns import Signature, check_q, check_signature, q_dim, support_box
from .reldim import A_coeff, DetContext, LinkRow
from .schur import h_at_q_powers, schur_bialternant

__all__ = [
    "QDetContext",
    "TSpec",
    "qA_coeff",
    "q_prefactor",
    "q_rel_dim_ratio",
    "psi_T",
    "general_q_ratio",
    "general_q_projection",
    "q_link_row",
    "q_to_1_check",
]


@dataclass(frozen=True)
class QDetContext:
    """Trapezoid family with a q-weight: bottom length K, top row nu, 0<q<1."""

    K: int
    nu: Signature
    q: Rat

    def __post_init__(self):
        object.__setattr__(self, "nu", check_signature(self.nu))
        object.__setattr__(self, "q", check_q(self.q))
        if not 1 <= self.K < len(self.nu):
            raise ValueError("need 1 <= K < N")

    @property
    def N(self) -> int:
        return len(self.nu)

    def nodes(self) -> tuple[int, ...]:
        return tuple(v - j for j, v in enumerate(self.nu, start=1))


@dataclass(frozen=True)
class TSpec:
    """Subset T of {0, ..., N-1} with |T| = N - K; S is the complement and
    S' = {N - s : s in S} the reflected exponents used for row indices."""

    N: int
    K: int
    T: tuple

    def __post_init__(self):
        t = tuple(sorted(int(v) for v in self.T))
        object.__setattr__(self, "T", t)
        if len(set(t)) != len(t) or any(not 0 <= v < self.N for v in t):
            raise ValueError("T must be a subset of {0, ..., N-1}")
        if len(t) != self.N - self.K:
            raise ValueError("|T| must equal N - K")

    @property
    def S(self) -> tuple:
        return tuple(s for s in range(self.N) if s not in set(self.T))

    @property
    def S_prime(self) -> tuple:
        return tuple(sorted(self.N - s for s in self.S))


def _q_poly_part(ctx: QDetContext, i: int, node: int) -> Rat:
    """prod_{r=1..N} (q^node - q^{-r}) / prod_{r=i..N-K+i} (...) with the
    shared index range cancelled symbolically."""
    n, k, q = ctx.N, ctx.K, ctx.q
    base = q**node
    out = Fraction(1)
    for r in range(1, i):
        out *= base - q**-r
    for r in range(n - k + i + 1, n + 1):
        out *= base - q**-r
    return out


@lru_cache(maxsize=1 << 18)
def qA_coeff(ctx: QDetContext, i: int, x: int) -> Rat:
    """q-residue sum at the particle positions a_j = nu_j - j >= x."""
    if not 1 <= i <= ctx.K:
        raise ValueError("coefficient index out of range")
    n, k, q = ctx.N, ctx.K, ctx.q
    nodes = ctx.nodes()
    total = Fraction(0)
    for j, aj in enumerate(nodes):
        if aj < x:
            break
        denom = Fraction(1)
        qa = q**aj
        for r, ar in enumerate(nodes):
            if r != j:
                denom *= qa - q**ar
        total += (
            q_pochhammer(q ** (aj + 1 - x), q, n - k - 1)
            * _q_poly_part(ctx, i, aj)
            / denom
        )
    return (1 - q ** (n - k)) * total


def q_prefactor(ctx: QDetContext, kappa: Sequence[int]) -> Rat:
    """(-1)^{K(N-K)} q^{(N-K)|kappa|} q^{-K(N-K)(N+2)/2}."""
    n, k, q = ctx.N, ctx.K, ctx.q
    exp2 = k * (n - k) * (n + 2)
    assert exp2 % 2 == 0
    return (
        Fraction(-1) ** (k * (n - k))
        * q ** ((n - k) * sum(kappa))
        * q ** (-exp2 // 2)
    )


def q_rel_dim_ratio(ctx: QDetContext, kappa: Sequence[int]) -> Rat:
    """(q-weighted trapezoid count) / (q-weighted triangular count)."""
    kappa = check_signature(kappa)
    if len(kappa) != ctx.K:
        raise ValueError("bottom row must have length K")
    k = ctx.K
    matrix = RatMatrix(
        [[qA_coeff(ctx, i, kappa[j - 1] - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    )
    return q_prefactor(ctx, kappa) * matrix.det()


# ---------------------------------------------------------------------------
# general point subsets via inverse Vandermonde

_q_inverse_cache: dict = {}


def _q_nodes_inverse(nu: Signature, q: Rat) -> RatMatrix:
    key = (nu, q)
    if key not in _q_inverse_cache:
        nodes = [q ** (v - j) for j, v in enumerate(nu, start=1)]
        _q_inverse_cache[key] = vandermonde_inverse(nodes)
    return _q_inverse_cache[key]


@lru_cache(maxsize=1 << 18)
def psi_T(ctx: QDetContext, tspec: TSpec, i: int, x: int) -> Rat:
    """sum_j h_{nu_j - j - x}(q^T) [V^{-1}]_{i, col(j)} where column col(j)
    of the inverse Vandermonde belongs to the node q^{nu_j - j}."""
    if not 1 <= i <= ctx.N:
        raise ValueError("row index out of range")
    inv = _q_nodes_inverse(ctx.nu, ctx.q)
    total = Fraction(0)
    for j, aj in enumerate(ctx.nodes()):
        h = h_at_q_powers(aj - x, tspec.T, ctx.q)
        if h:
            total += h * inv[i - 1, j]
    return total


def general_q_ratio(ctx: QDetContext, tspec: TSpec, kappa: Sequence[int]) -> Rat:
    """s_{nu/kappa}(q^T) / s_nu(1, q, ..., q^{N-1}) as
    (-q^N)^{sum T} V(q^{-1..-N}) / V(q^T) det[psi^T_{s'_i}(kappa_j - j)]."""
    kappa = check_signature(kappa)
    n, k, q = ctx.N, ctx.K, ctx.q
    if tspec.N != n or tspec.K != k:
        raise ValueError("subset spec does not match context")
    if len(kappa) != k:
        raise ValueError("bottom row must have length K")
    prefactor = (-(q**n)) ** sum(tspec.T)
    v_num = Fraction(1)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            v_num *= q**-a - q**-b
    v_den = Fraction(1)
    t = tspec.T
    for a in range(len(t)):
        for b in range(a + 1, len(t)):
            v_den *= q ** t[a] - q ** t[b]
    sp = tspec.S_prime
    matrix = RatMatrix(
        [[psi_T(ctx, tspec, sp[i], kappa[j] - (j + 1)) for j in range(k)] for i in range(k)]
    )
    return prefactor * v_num / v_den * matrix.det()


def general_q_projection(ctx: QDetContext, tspec: TSpec, kappa: Sequence[int]) -> Rat:
    """Probability weight s_kappa(q^S) s_{nu/kappa}(q^T) / s_nu(1..q^{N-1});
    sums to 1 over kappa and reduces to the q-link row for the bottom run
    T = {0, ..., N-K-1}."""
    kappa = check_signature(kappa)
    points = [ctx.q**s for s in tspec.S]
    return schur_bialternant(kappa, points) * general_q_ratio(ctx, tspec, kappa)


# ---------------------------------------------------------------------------
# q-link rows and the q -> 1 degeneration


def q_link_row(nu: Sequence[int], K: int, q: RatLike) -> LinkRow:
    """Markov-kernel row of the q-deformed link: q-dimension of kappa times
    the q-relative ratio, over the support box."""
    nu = check_signature(nu)
    ctx = QDetContext(K, nu, Fraction(q))
    weights = {}
    for kappa in support_box(nu, K):
        value = q_dim(kappa, ctx.q) * q_rel_dim_ratio(ctx, kappa)
        if value != 0:
            weights[kappa] = value
    return LinkRow(nu, K, weights)


def q_to_1_check(K: int, nu: Sequence[int], i: int, x: int, q: RatLike) -> tuple[Rat, Rat]:
    """Pair (qA_i(x) at this q, (-1)^{N-K} A_i(x)); the first converges to
    the second as q -> 1."""
    nu = check_signature(nu)
    qctx = QDetContext(K, nu, Fraction(q))
    ctx = DetContext(K, nu)
    target = Fraction(-1) ** (len(nu) - K) * A_coeff(ctx, i, x)
    return qA_coeff(qctx, i, x), target
