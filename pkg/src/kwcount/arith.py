"""Sum-free sets via circulant graphs, and the 3-term-AP container machinery.

Integers 1..n are mapped to graph vertices 0..n-1 (``labels`` keeps the
original integers).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from kwcount.bounds import LogBound, log2_binomial, log2_sum, sapozhenko_bound
from kwcount.errors import NotApplicableError, PreconditionError, ResourceError
from kwcount.graph import Graph
from kwcount.oracle import is_sum_free, iter_3aps, max_3ap_free_subset

ROTH_CAP = 40
VARNAVIDES_CAP = 22


# -- sum-free sets ---------------------------------------------------------


@dataclass(frozen=True)
class SumFreeInstance:
    n: int
    S: frozenset[int]
    graph: Graph


def gs_shift_limit(n: int) -> int:
    """Largest allowed shift, ⌈n/2⌉ − 1."""
    return (n + 1) // 2 - 1


def build_gs_graph(n: int, S: Iterable[int]) -> Graph:
    """Circulant graph on [n]: x ~ y iff x ± s ≡ y (mod n) for some s in S."""
    S = frozenset(S)
    if not S:
        raise PreconditionError("shift set must be nonempty")
    limit = gs_shift_limit(n)
    bad = [s for s in S if not 1 <= s <= limit]
    if bad:
        raise PreconditionError(f"shifts {sorted(bad)} outside [1, {limit}]")
    edges = [(x, (x + s) % n) for x in range(n) for s in S]
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def sum_free_instance(n: int, S: Iterable[int]) -> SumFreeInstance:
    S = frozenset(S)
    return SumFreeInstance(n, S, build_gs_graph(n, S))


def sum_free_independence_check(A: Iterable[int], t: int, n: int) -> bool:
    """Check that A minus its t smallest elements is independent in G_{S_A}.

    Raises NotApplicableError when those t elements are not all below n/2.
    """
    A = sorted(set(A))
    if not is_sum_free(A):
        raise PreconditionError("set is not sum-free")
    if A and A[-1] > n:
        raise PreconditionError(f"set is not contained in [1, {n}]")
    if not 1 <= t <= len(A):
        raise PreconditionError("need 1 <= t <= |A|")
    S = A[:t]
    if S[-1] > gs_shift_limit(n):
        raise NotApplicableError(f"S_A = {S} not within [1, {gs_shift_limit(n)}]")
    G = build_gs_graph(n, S)
    return G.is_independent(x - 1 for x in A[t:])


def theorem4_pipeline(n: int, C_reg: float) -> LogBound:
    """log2 of the two-term bound on the number of sum-free subsets of [n].

    Sets with few elements below n/2 are counted crudely; the rest are
    grouped by their ⌊n^{2/3}⌋ smallest elements S and bounded by the count
    of independent sets in the 2|S|-regular graph G_S.
    """
    if n < 8:
        raise PreconditionError("need n >= 8")
    t = n ** (2 / 3)
    k = math.floor(t)
    few_small = t * math.log2(n / 2) + n / 2 + 1
    grouped = log2_binomial(n / 2, k) + sapozhenko_bound(n, 2 * k, C_reg).log2_value
    return LogBound(log2_sum([few_small, grouped]), "sum-free-count", {"n": n, "C_reg": C_reg})


# -- 3-term APs ------------------------------------------------------------


@dataclass(frozen=True)
class ApInstance:
    n: int
    triples: tuple[tuple[int, int, int], ...]

    def degree(self, x: int, within: Iterable[int] | None = None) -> int:
        """Number of triples containing x (and lying inside ``within`` if given)."""
        if within is None:
            return sum(1 for t in self.triples if x in t)
        B = frozenset(within)
        return sum(1 for t in self.triples if x in t and B.issuperset(t))


def build_3ap_hypergraph(n: int) -> ApInstance:
    return ApInstance(n, tuple(iter_3aps(n)) if n >= 3 else ())


def high_degree_elements(B: Iterable[int], ap: ApInstance, threshold: float) -> frozenset[int]:
    """Elements of B lying in at least ``threshold`` 3-term APs inside B."""
    B = frozenset(B)
    deg = dict.fromkeys(B, 0)
    for t in ap.triples:
        if B.issuperset(t):
            for x in t:
                deg[x] += 1
    return frozenset(x for x, c in deg.items() if c >= threshold)


def gw_witnesses(B: Iterable[int], W: Iterable[int], ap: ApInstance) -> dict[tuple[int, int], list[int]]:
    """Map each pair {x, y} ⊆ B to the z in W completing it to an AP inside B."""
    B = frozenset(B)
    W = frozenset(W)
    if not W <= B:
        raise PreconditionError("W must be a subset of B")
    out: dict[tuple[int, int], list[int]] = {}
    for t in ap.triples:
        if not B.issuperset(t):
            continue
        for z in t:
            if z in W:
                x, y = (u for u in t if u != z)
                out.setdefault((x, y), []).append(z)
    return out


def build_gw_graph(B: Iterable[int], W: Iterable[int], ap: ApInstance) -> Graph:
    """Graph on B joining x, y whenever {x, y, z} is a 3-term AP for some z in W.

    Vertex i of the result is the i-th smallest element of B.
    """
    order = sorted(set(B))
    index = {x: i for i, x in enumerate(order)}
    pairs = gw_witnesses(order, W, ap)
    return Graph.from_edges(len(order), [(index[x], index[y]) for x, y in pairs], labels=order)


def is_delta_roth(A: Iterable[int], delta: float, cap: int = ROTH_CAP) -> bool:
    """Every subset of A with at least δ|A| elements contains a 3-term AP."""
    A = sorted(set(A))
    if len(A) > cap:
        raise ResourceError(f"δ-Roth decision capped at |A| = {cap}, got {len(A)}")
    if not A:
        return True
    need = math.ceil(delta * len(A) - 1e-12)
    # A is δ-Roth iff no AP-free subset reaches size ⌈δ|A|⌉
    return max_3ap_free_subset(A, cap=cap, target=max(need, 0)) < delta * len(A)


@dataclass(frozen=True)
class RothEstimate:
    n: int
    m: int
    delta: float
    trials: int
    successes: int

    @property
    def rate(self) -> float:
        return self.successes / self.trials


def roth_random_experiment(n: int, m: int, delta: float, trials: int, seed: int) -> RothEstimate:
    """Fraction of uniformly random m-subsets of [n] that are δ-Roth.

    Trial i draws its subset from ``random.Random(seed ^ i)``, so any trial can
    be reproduced on its own.
    """
    if trials <= 0:
        raise PreconditionError("at least one trial is needed for a rate")
    if not 0 <= m <= n:
        raise PreconditionError("need 0 <= m <= n")
    if m > ROTH_CAP:
        raise ResourceError(f"per-trial δ-Roth decision capped at m = {ROTH_CAP}, got {m}")
    population = range(1, n + 1)
    hits = sum(is_delta_roth(random.Random(seed ^ i).sample(population, m), delta) for i in range(trials))
    return RothEstimate(n, m, delta, trials, hits)


@dataclass(frozen=True)
class RothRecursionState:
    step: int
    n_prime: int
    m_remaining: int


def default_recursion_depth(epsilon: float, beta: float) -> int:
    return math.ceil((12 - 6 * epsilon) / beta)


def roth_recursion_states(n: int, m: int, epsilon: float, beta: float, K: int | None = None) -> list[RothRecursionState]:
    """Ground-set budget and remaining size after each application of the recursive step."""
    if K is None:
        K = default_recursion_depth(epsilon, beta)
    w = math.isqrt(n)
    shrink = math.ceil(beta * n / 12)
    return [RothRecursionState(s, n - s * shrink, m - 2 * s * w) for s in range(K + 1)]


def theorem8_recursion_bound(n: int, m: int, epsilon: float, beta: float, K: int | None = None) -> LogBound:
    """log2 of 2^K · C(n, ⌊√n⌋)^{2K} · C(εn/2, m − 2K⌊√n⌋)."""
    if K is None:
        K = default_recursion_depth(epsilon, beta)
    w = math.isqrt(n)
    if m < 2 * K * w:
        raise PreconditionError(f"need m >= 2K⌊√n⌋ = {2 * K * w}")
    value = K + 2 * K * math.log2(math.comb(n, w)) + log2_binomial(epsilon * n / 2, m - 2 * K * w)
    return LogBound(value, "ap-free-recursion", {"n": n, "m": m, "epsilon": epsilon, "beta": beta, "K": K})


def varnavides_profile(n: int, delta: float, cap: int = VARNAVIDES_CAP) -> tuple[int, float]:
    """(min over B ⊆ [n] with |B| ≥ δn of the number of 3-term APs in B, that minimum / n²)."""
    if n > cap:
        raise ResourceError(f"Varnavides scan capped at n = {cap}, got {n}")
    k = math.ceil(delta * n - 1e-12)
    masks = np.arange(1 << n, dtype=np.int64)
    masks = masks[np.bitwise_count(masks) >= k]
    if masks.size == 0:
        raise PreconditionError("no subset is large enough")
    counts = np.zeros_like(masks)
    for x, y, z in iter_3aps(n):
        counts += (masks >> (x - 1)) & (masks >> (y - 1)) & (masks >> (z - 1)) & 1
    low = int(counts.min())
    return low, low / n**2

