"""Smallest adjacency eigenvalue of regular graphs and the bounds it drives."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from kwcount.bounds import LogBound, log2_binomial
from kwcount.errors import PreconditionError, ResourceError
from kwcount.graph import Graph, from_mask

EIG_CAP = 64
SUBSET_CAP = 14
SLACK_TOL = 1e-6


@dataclass(frozen=True)
class SpectralProfile:
    n: int
    d: int
    lambda_min: float


def adjacency_matrix(G: Graph) -> np.ndarray:
    M = np.zeros((G.n, G.n))
    for u, v in G.edges():
        M[u, v] = M[v, u] = 1.0
    return M


def _require_regular(G: Graph) -> int:
    d = G.regular_degree()
    if d is None:
        raise PreconditionError("graph is not regular")
    return d


def adjacency_spectrum(G: Graph, cap: int = EIG_CAP) -> np.ndarray:
    """Eigenvalues in ascending order."""
    if G.n > cap:
        raise ResourceError(f"eigen-decomposition capped at n = {cap}, got {G.n}")
    return np.linalg.eigvalsh(adjacency_matrix(G))


def smallest_eigenvalue(G: Graph, cap: int = EIG_CAP) -> float:
    _require_regular(G)
    return float(adjacency_spectrum(G, cap)[0])


def spectral_profile(G: Graph) -> SpectralProfile:
    return SpectralProfile(G.n, _require_regular(G), smallest_eigenvalue(G))


def alon_chung_slack(G: Graph, size: int, edges: int, d: int, lam: float) -> float:
    """2e(A) − (d/n)|A|² − (λ/n)|A|(n − |A|) for a set with the given size and edge count."""
    n = G.n
    return 2 * edges - d / n * size * size - lam / n * size * (n - size)


def alon_chung_check(G: Graph, A: Iterable[int], lam: float | None = None) -> bool:
    d = _require_regular(G)
    if lam is None:
        lam = smallest_eigenvalue(G)
    A = frozenset(A)
    return alon_chung_slack(G, len(A), G.induced_edges(A), d, lam) >= -SLACK_TOL


def alon_chung_exhaustive(G: Graph, cap: int = SUBSET_CAP) -> tuple[bool, float, frozenset[int]]:
    """Check the inequality on all 2^n subsets.

    Returns (holds, worst slack, a subset attaining it).
    """
    d = _require_regular(G)
    if G.n > cap:
        raise ResourceError(f"exhaustive subset scan capped at n = {cap}, got {G.n}")
    lam = smallest_eigenvalue(G)
    n = G.n
    masks = np.arange(1 << n, dtype=np.int64)
    edges = np.zeros_like(masks)
    for u, v in G.edges():
        edges += (masks >> u) & (masks >> v) & 1
    sizes = np.bitwise_count(masks).astype(float)
    slack = 2 * edges - d / n * sizes**2 - lam / n * sizes * (n - sizes)
    worst = int(np.argmin(slack))
    return bool(slack[worst] >= -SLACK_TOL), float(slack[worst]), from_mask(worst)


def hoffman_bound(n: int, d: int, lam: float) -> float:
    """-λ/(d − λ)·n, an upper bound on α for d-regular graphs with smallest eigenvalue λ."""
    if d == lam:
        raise PreconditionError("degenerate Hoffman ratio: d equals lambda")
    if d < lam:
        raise PreconditionError("need d > lambda")
    return -lam / (d - lam) * n


def eigenvalue_count_bound(n: int, d: int, lam: float, epsilon: float, m: int) -> LogBound:
    """log2 C((λ/(d+λ) + ε)·n, m) with λ = −(smallest eigenvalue) ≥ 0.

    When λ/(d+λ) + ε ≥ 1 the statement has no content; the bound is then
    returned as +inf.
    """
    if m < 0:
        raise PreconditionError("m must be non-negative")
    ratio = lam / (d + lam) + epsilon
    params = {"n": n, "d": d, "lambda": lam, "epsilon": epsilon, "m": m}
    if ratio >= 1:
        return LogBound(math.inf, "eigenvalue-count(vacuous)", params)
    return LogBound(log2_binomial(ratio * n, m), "eigenvalue-count", params)


def eigenvalue_bound_applies(n: int, d: int, m: int, C: float) -> bool:
    """The size condition m ≥ C·n/d."""
    return m >= C * n / d
