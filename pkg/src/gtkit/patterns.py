"""Interlacing integer signatures and trapezoidal pattern enumeration.

A signature of length N is a nonincreasing tuple of integers. A trapezoidal
pattern with bottom row kappa (length K) and top row nu (length N) is a chain
kappa = row_K < row_{K+1} < ... < row_N = nu in which consecutive rows
interlace. These enumerators are the brute-force oracles the determinantal
routes are checked against, so they stay deliberately naive: every pattern is
walked explicitly, with a work budget so a too-large instance fails loudly
instead of running unbounded.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterator, Sequence

from .linalg import Rat

Signature = tuple  # of ints, nonincreasing

DEFAULT_BUDGET = 10_000_000

__all__ = [
    "Signature",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "check_signature",
    "parse_signature",
    "format_signature",
    "interlaces",
    "fits_under",
    "GTPattern",
    "enumerate_trapezoids",
    "rel_dim_oracle",
    "rel_dim_table",
    "dim_product",
    "dim_oracle",
    "volume",
    "q_dim",
    "q_dim_oracle",
    "q_rel_dim_oracle",
    "check_q",
    "all_signatures",
    "support_box",
]


class BudgetExceededError(RuntimeError):
    """Enumeration abandoned because it consumed its work budget."""


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, units: int):
        self.remaining = units

    def consume(self, units: int) -> None:
        self.remaining -= units
        if self.remaining < 0:
            raise BudgetExceededError(
                "enumeration exceeded its work budget; "
                "use the determinantal route or raise the budget "
                "(GTKIT_BUDGET or the budget= argument)"
            )


def _resolve_budget(budget: int | None) -> _Budget:
    if budget is None:
        env = os.environ.get("GTKIT_BUDGET")
        budget = int(env) if env else DEFAULT_BUDGET
    return _Budget(budget)


# ---------------------------------------------------------------------------
# signatures


def check_signature(sig: Sequence[int]) -> Signature:
    out = tuple(int(x) for x in sig)
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"signature parts must be nonincreasing, got {out}")
    return out


def parse_signature(text: str) -> Signature:
    """Parse '4,2,0,0,-1' (empty string is the empty signature)."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for pos, token in enumerate(text.split(","), start=1):
        try:
            parts.append(int(token))
        except ValueError:
            raise ValueError(
                f"bad integer {token.strip()!r} at position {pos} in {text!r}"
            ) from None
    return check_signature(parts)


def format_signature(sig: Sequence[int]) -> str:
    return ",".join(str(x) for x in sig)


def interlaces(lower: Sequence[int], upper: Sequence[int]) -> bool:
    """True when upper_1 >= lower_1 >= upper_2 >= ... >= lower_n >= upper_{n+1}."""
    if len(upper) != len(lower) + 1:
        return False
    for i, m in enumerate(lower):
        if not (upper[i] >= m >= upper[i + 1]):
            return False
    return True


def fits_under(row: Sequence[int], nu: Sequence[int]) -> bool:
    """True when some interlacing chain continues row up to nu.

    Equivalent to nu_{i + N - m} <= row_i <= nu_i for all i, the condition
    that the skew shape between them stacks into N - m interlacing steps.
    """
    n, m = len(nu), len(row)
    if m > n:
        return False
    return all(nu[i + n - m] <= row[i] <= nu[i] for i in range(m))


# ---------------------------------------------------------------------------
# patterns


class GTPattern:
    """A chain of pairwise interlacing rows with consecutive lengths."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise ValueError("pattern needs at least one row")
        for lower, upper in zip(rows, rows[1:]):
            if not interlaces(lower, upper):
                raise ValueError(f"rows {lower} and {upper} do not interlace")
        self.rows = rows

    @property
    def bottom(self) -> Signature:
        return self.rows[0]

    @property
    def top(self) -> Signature:
        return self.rows[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"GTPattern({self.rows})"


def volume(pattern: GTPattern) -> int:
    """Sum of the entries of all rows below the top; pattern must be triangular."""
    if pattern.rows[0] != ():
        raise ValueError("volume is defined for triangular patterns (empty bottom row)")
    return sum(sum(row) for row in pattern.rows[:-1])


def _row_ranges(mu: Signature, nu: Signature, m: int) -> list[range] | None:
    """Per-part ranges for the row of length m directly above mu, constrained
    to stay completable up to nu. None when empty."""
    n = len(nu)
    ranges = []
    for i in range(m):
        lo = nu[i + n - m]
        if i < len(mu):
            lo = max(lo, mu[i])
        hi = nu[i]
        if i >= 1:
            hi = min(hi, mu[i - 1])
        if lo > hi:
            return None
        ranges.append(range(lo, hi + 1))
    return ranges


def _ascend(mu: Signature, nu: Signature, level: int, budget: _Budget) -> Iterator[tuple]:
    """Yield all chains (row_{level+1}, ..., row_N = nu) above mu, lexicographically."""
    n = len(nu)
    if level == n:
        yield ()
        return
    m = level + 1
    ranges = _row_ranges(mu, nu, m)
    if ranges is None:
        return
    row = [0] * m
    budget_consume = budget.consume

    # row_i <= mu_{i-1} <= row_{i-1}, so candidates are automatically nonincreasing
    def rec(i: int) -> Iterator[tuple]:
        if i == m:
            budget_consume(m)
            built = tuple(row)
            for rest in _ascend(built, nu, m, budget):
                yield (built,) + rest
            return
        for v in ranges[i]:
            row[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_trapezoids(
    kappa: Sequence[int], nu: Sequence[int], budget: int | None = None
) -> Iterator[GTPattern]:
    """All trapezoidal patterns with bottom kappa and top nu, in lexicographic
    order on the concatenation of the rows from bottom to top."""
    kappa = check_signature(kappa)
    nu = check_signature(nu)
    if len(kappa) > len(nu):
        raise ValueError("bottom row longer than top row")
    b = _resolve_budget(budget)
    if len(kappa) == len(nu):
        if kappa == nu:
            yield GTPattern((nu,))
        return
    if not fits_under(kappa, nu):
        return
    for chain in _ascend(kappa, nu, len(kappa), b):
        yield GTPattern((kappa,) + chain)


def rel_dim_oracle(kappa: Sequence[int], nu: Sequence[int], budget: int | None = None) -> int:
    """Number of trapezoids with bottom kappa and top nu, counted one by one."""
    return sum(1 for _ in enumerate_trapezoids(kappa, nu, budget))


def _descend_counts(
    lam: Signature, level: int, to_level: int, budget: _Budget, table: dict, weight: int
) -> None:
    if level == to_level:
        table[lam] = table.get(lam, 0) + weight
        return
    m = level - 1
    if m == 0:
        table[()] = table.get((), 0) + weight
        return
    budget_consume = budget.consume
    lo = [lam[i + 1] for i in range(m)]
    hi = [lam[i] for i in range(m)]
    row = [0] * m

    def rec(i: int) -> None:
        if i == m:
            budget_consume(m)
            _descend_counts(tuple(row), m, to_level, budget, table, weight)
            return
        for v in range(lo[i], hi[i] + 1):
            row[i] = v
            rec(i + 1)

    rec(0)


def rel_dim_table(nu: Sequence[int], K: int, budget: int | None = None) -> dict:
    """Trapezoid counts for every bottom row at once: {kappa: count}.

    Same exhaustive walk as rel_dim_oracle, grouped by where each chain
    lands at level K.
    """
    nu = check_signature(nu)
    if not 0 <= K <= len(nu):
        raise ValueError("level out of range")
    b = _resolve_budget(budget)
    table: dict = {}
    _descend_counts(nu, len(nu), K, b, table, 1)
    return table


def dim_oracle(nu: Sequence[int], budget: int | None = None) -> int:
    """Number of triangular patterns with top row nu, counted one by one."""
    nu = check_signature(nu)
    if not nu:
        return 1
    b = _resolve_budget(budget)
    table: dict = {}
    _descend_counts(nu, len(nu), 1, b, table, 1)
    return sum(table.values())


def dim_product(nu: Sequence[int]) -> int:
    """Triangular pattern count via the hook-style product
    prod_{i<j} (nu_i - nu_j + j - i) / (j - i)."""
    nu = check_signature(nu)
    n = len(nu)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= nu[i] - nu[j] + j - i
            den *= j - i
    out = Fraction(num, den)
    assert out.denominator == 1
    return int(out)


# ---------------------------------------------------------------------------
# q-weighted counts


def check_q(q) -> Rat:
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q must satisfy 0 < q < 1, got {q}")
    return q


def q_dim(nu: Sequence[int], q) -> Rat:
    """Generating function of triangular patterns by volume:
    prod_{i<j} (q^{nu_i - i} - q^{nu_j - j}) / (q^{-i} - q^{-j})."""
    nu = check_signature(nu)
    q = check_q(q)
    n = len(nu)
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out *= (q ** (nu[i - 1] - i) - q ** (nu[j - 1] - j)) / (q**-i - q**-j)
    return out


def _descend_q(lam: Signature, level: int, q: Rat, budget: _Budget) -> Rat:
    if level == 1:
        return Fraction(1)
    m = level - 1
    budget_consume = budget.consume
    lo = [lam[i + 1] for i in range(m)]
    hi = [lam[i] for i in range(m)]
    row = [0] * m
    total = Fraction(0)

    def rec(i: int) -> None:
        nonlocal total
        if i == m:
            budget_consume(m)
            total += q ** sum(row) * _descend_q(tuple(row), m, q, budget)
            return
        for v in range(lo[i], hi[i] + 1):
            row[i] = v
            rec(i + 1)

    rec(0)
    return total


def q_dim_oracle(nu: Sequence[int], q, budget: int | None = None) -> Rat:
    """Sum of q^volume over all triangular patterns, walked explicitly."""
    nu = check_signature(nu)
    q = check_q(q)
    if not nu:
        return Fraction(1)
    if len(nu) == 1:
        return Fraction(1)
    b = _resolve_budget(budget)
    return _descend_q(nu, len(nu), q, b)


def q_rel_dim_oracle(kappa: Sequence[int], nu: Sequence[int], q, budget: int | None = None) -> Rat:
    """q-weighted trapezoid count: q^{|kappa|} * sum over chains of
    q^{|row_{K+1}| + ... + |row_{N-1}|} (top row unweighted)."""
    kappa = check_signature(kappa)
    nu = check_signature(nu)
    q = check_q(q)
    n, k = len(nu), len(kappa)
    prefix = q ** sum(kappa)
    if k == n:
        return prefix if kappa == nu else Fraction(0)
    b = _resolve_budget(budget)
    total = Fraction(0)
    for chain in _ascend(kappa, nu, k, b):
        middle = chain[:-1]
        total += q ** sum(sum(r) for r in middle)
    return prefix * total


# ---------------------------------------------------------------------------
# sweeps


def all_signatures(length: int, lo: int, hi: int) -> Iterator[Signature]:
    """All signatures of the given length with parts in [lo, hi], lexicographic."""
    if length == 0:
        yield ()
        return

    def rec(prefix: list, cap: int) -> Iterator[Signature]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(lo, cap + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], hi)


def support_box(nu: Sequence[int], K: int) -> Iterator[Signature]:
    """All kappa of length K with parts between nu_N and nu_1; contains the
    support of every link row with top nu."""
    nu = check_signature(nu)
    if not nu:
        yield ()
        return
    yield from all_signatures(K, nu[-1], nu[0])
