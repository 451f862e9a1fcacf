"""Closed-form upper/lower bounds, all evaluated in log base 2.

A bound that is vacuously zero (for instance a binomial with more items to
choose than are available) carries ``-inf`` so callers can still take maxima
and minima over candidate bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from kwcount.errors import PreconditionError

LN2 = math.log(2)


@dataclass(frozen=True)
class LogBound:
    log2_value: float
    provenance: str
    params: dict = field(default_factory=dict, compare=False)

    @property
    def vacuous_zero(self) -> bool:
        return self.log2_value == -math.inf

    def params_text(self) -> str:
        return ";".join(f"{k}={_fmt(v)}" for k, v in self.params.items())


def _fmt(x) -> str:
    return f"{x:.12g}" if isinstance(x, float) else str(x)


def log2_int(x: int) -> float:
    """log2 of a non-negative (possibly huge) integer; -inf for 0."""
    return math.log2(x) if x > 0 else -math.inf


def log2_binomial(a: float, b: int) -> float:
    """log2 of the generalised binomial Γ(a+1) / (Γ(b+1) Γ(a−b+1))."""
    if b < 0:
        raise PreconditionError("binomial with negative lower argument")
    if a < b:
        return -math.inf
    return (math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)) / LN2


def log2_sum(values) -> float:
    """log2(Σ 2^v) without overflow."""
    values = [v for v in values if v != -math.inf]
    if not values:
        return -math.inf
    top = max(values)
    return top + math.log2(sum(2.0 ** (v - top) for v in values))


def sandwich_bounds(alpha: int, n: int) -> tuple[float, float]:
    """(log2 lower, log2 upper) for i(G) given α(G): 2^α ≤ i ≤ Σ_{m≤α} C(n, m)."""
    if not 0 <= alpha <= n:
        raise PreconditionError("need 0 <= alpha <= n")
    return float(alpha), log2_int(sum(math.comb(n, m) for m in range(alpha + 1)))


def sapozhenko_bound(n: int, d: int, C: float) -> LogBound:
    """(1 + C·sqrt(ln d / d))·n/2 for n-vertex d-regular graphs."""
    if d < 2:
        raise PreconditionError("degree must be at least 2")
    value = (1 + C * math.sqrt(math.log(d) / d)) * n / 2
    return LogBound(value, "sapozhenko", {"n": n, "d": d, "C": C})


def kahn_zhao_bound(n: int, d: int) -> LogBound:
    if d < 1:
        raise PreconditionError("degree must be at least 1")
    return LogBound(n / (2 * d) * math.log2(2 ** (d + 1) - 1), "kahn-zhao", {"n": n, "d": d})


def kahn_zhao_dominates(count: int, n: int, d: int) -> bool:
    """Exact test of count ≤ (2^{d+1} − 1)^{n/(2d)}, by raising both sides to 2d."""
    return count ** (2 * d) <= (2 ** (d + 1) - 1) ** n


def kw_c4_bound(n: int, C: float) -> LogBound:
    return LogBound(C * n ** 1.5, "kw-c4", {"n": n, "C": C})


def theorem8_bound(n: int, m: int, epsilon: float) -> LogBound:
    """log2 C(εn, m): the cap on m-subsets of [n] without 3-term APs."""
    if not 0 < epsilon <= 1:
        raise PreconditionError("epsilon must lie in (0, 1]")
    if m < 0:
        raise PreconditionError("m must be non-negative")
    return LogBound(log2_binomial(epsilon * n, m), "ap-free-count", {"n": n, "m": m, "epsilon": epsilon})


def theorem7_failure_bound(n: int, m: int, delta: float, epsilon: float | None = None) -> tuple[LogBound, LogBound]:
    """Bounds on log2 P(random m-subset of [n] is not δ-Roth).

    Returns ``(chain, simplified)``: ``chain`` is log2 of
    C(εn, k)·(m/n)^k with k = ⌈δm⌉, ``simplified`` is the final −δm.
    """
    if epsilon is None:
        epsilon = delta / 6
    if not 0 < m <= n:
        raise PreconditionError("need 0 < m <= n")
    k = math.ceil(delta * m)
    params = {"n": n, "m": m, "delta": delta, "epsilon": epsilon, "k": k}
    chain = log2_binomial(epsilon * n, k) + k * math.log2(m / n)
    return (
        LogBound(chain, "roth-failure-chain", params),
        LogBound(-delta * m, "roth-failure", params),
    )
