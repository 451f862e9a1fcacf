"""Counting C4-free graphs by attaching one vertex at a time.

A new vertex can be attached to a C4-free graph G without creating a C4
exactly when its neighbourhood is independent in the square of G (two
vertices adjacent iff they share a neighbour in G).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from kwcount.bounds import LogBound, log2_binomial
from kwcount.errors import PreconditionError
from kwcount.graph import Graph, to_mask
from kwcount.kw import lemma1_count_bound
from kwcount.oracle import has_c4

Q_RULES = ("minimal", "polylog")


@dataclass(frozen=True)
class SquareGraph:
    base: Graph
    square: Graph


def square_graph(G: Graph) -> SquareGraph:
    edges = [(x, y) for x, y in itertools.combinations(range(G.n), 2) if G.masks[x] & G.masks[y]]
    return SquareGraph(G, Graph.from_edges(G.n, edges, labels=G.labels))


def witnesses(G: Graph, x: int, y: int) -> list[int]:
    """Common neighbours of x and y."""
    return sorted(G.adj[x] & G.adj[y])


def _require_c4_free(G: Graph):
    if has_c4(G):
        raise PreconditionError("graph contains a C4")


def count_c4_extensions(G: Graph, d: int) -> int:
    """Number of d-sets N such that adding a vertex adjacent to exactly N keeps G C4-free."""
    _require_c4_free(G)
    if not 0 <= d <= G.n:
        raise PreconditionError("need 0 <= d <= n")
    H = square_graph(G).square.masks
    count = 0
    for N in itertools.combinations(range(G.n), d):
        mask = to_mask(N)
        if all(not (H[v] & mask) for v in N):
            count += 1
    return count


def attach_vertex(G: Graph, N: Iterable[int]) -> Graph:
    return Graph.from_edges(G.n + 1, G.edges() + [(v, G.n) for v in N])


def count_c4_extensions_direct(G: Graph, d: int) -> int:
    """Same count, by attaching every candidate d-set and testing for a C4."""
    _require_c4_free(G)
    return sum(1 for N in itertools.combinations(range(G.n), d) if not has_c4(attach_vertex(G, N)))


def eh_identity_check(G: Graph, B: Iterable[int]) -> bool:
    """e_H(B) = Σ_z C(deg_G(z, B), 2), and the convexity bound n·C(avg, 2) below it."""
    _require_c4_free(G)
    B = frozenset(B)
    H = square_graph(G).square
    e_H = H.induced_edges(B)
    degs = [len(G.adj[z] & B) for z in range(G.n)]
    identity = e_H == sum(math.comb(k, 2) for k in degs)
    if G.n == 0:
        return identity
    avg = Fraction(sum(degs), G.n)
    jensen = G.n * avg * (avg - 1) / 2
    return identity and e_H >= jensen


def _c4_small_degree_cutoff(n: int) -> float:
    return math.inf if n <= 1 else math.sqrt(n) / math.log(n)


def _lemma1_q(n: int, d: int, q_rule: str) -> int | None:
    """The q used for the large-degree branch, or None if none fits below d."""
    R = 2 * n / (d - 1)
    beta = min((d - 1) ** 2 / (2 * n), 1.0)
    # smallest q with R ≥ e^{-βq}·n
    q_min = max(0, math.ceil(math.log(n / R) / beta)) if n > R else 0
    if q_rule == "polylog":
        q_poly = math.ceil(3 * math.log(n) ** 3)
        if q_min <= q_poly <= d:
            return q_poly
    return q_min if q_min <= d else None


def gn_bound(n: int, d: int, q_rule: str = "minimal") -> LogBound:
    """Upper bound on the number of ways to attach a degree-d vertex to a C4-free
    n-vertex graph of minimum degree ≥ d − 1.

    Small d uses C(n, d). Larger d applies the independent-set counting lemma
    to the square graph with R = 2n/(d−1) and density (d−1)²/(2n); ``q_rule``
    picks q: "minimal" takes the smallest q meeting R ≥ e^{−βq}n, "polylog"
    takes ⌈3 (ln n)³⌉ when that lies in range.
    """
    if not 1 <= d <= n:
        raise PreconditionError("need 1 <= d <= n")
    if q_rule not in Q_RULES:
        raise PreconditionError(f"unknown q rule {q_rule!r}")
    if d <= _c4_small_degree_cutoff(n):
        return LogBound(log2_binomial(n, d), "c4-extensions(small-d)", {"n": n, "d": d})
    q = _lemma1_q(n, d, q_rule)
    if q is None:
        return LogBound(log2_binomial(n, d), "c4-extensions(trivial)", {"n": n, "d": d})
    bound = lemma1_count_bound(n, q, 2 * n / (d - 1), d)
    return LogBound(bound.log2_value, "c4-extensions(kw)", {"n": n, "d": d, "q": q})


def gn_max(n: int, q_rule: str = "minimal") -> float:
    """max over 0 ≤ d ≤ n of ``gn_bound(n, d)`` (d = 0 contributes log2 1 = 0)."""
    best = 0.0
    if n < 1:
        return best
    cutoff = _c4_small_degree_cutoff(n)
    d = np.arange(1, n + 1)
    # Cheap vectorised screen for the large-degree branch: drop d whose
    # container is certainly too small to host d − q more vertices.
    large = d > cutoff
    dd = d[large].astype(float)
    if dd.size:
        R = 2 * n / (dd - 1)
        beta = np.minimum((dd - 1) ** 2 / (2 * n), 1.0)
        q_min = np.where(n > R, np.ceil(np.log(np.maximum(n / R, 1.0)) / beta), 0.0)
        hopeful = np.floor(R) + 1 >= dd - q_min
        if q_rule == "polylog":
            q_poly = math.ceil(3 * math.log(n) ** 3)
            hopeful |= (np.floor(R) + 1 >= dd - q_poly) & (dd >= q_poly)
        candidates = list(d[~large]) + list(d[large][hopeful])
    else:
        candidates = list(d)
    for k in candidates:
        best = max(best, gn_bound(n, int(k), q_rule).log2_value)
    return best


def implied_claim_constant(n: int, q_rule: str = "minimal") -> float:
    """The C for which ``gn_max(n)`` equals exp(C·√n)."""
    if n < 1:
        raise PreconditionError("need n >= 1")
    return gn_max(n, q_rule) * math.log(2) / math.sqrt(n)


def fn_c4_bound_assembly(n: int, q_rule: str = "minimal") -> LogBound:
    """log2 of n!·n!·Π_{i=2..n} g_{i−1}, bounding the number of labelled C4-free graphs."""
    if n < 2:
        raise PreconditionError("need n >= 2")
    value = 2 * math.lgamma(n + 1) / math.log(2) + sum(gn_max(i - 1, q_rule) for i in range(2, n + 1))
    return LogBound(value, "c4-free-count", {"n": n, "q_rule": q_rule})
