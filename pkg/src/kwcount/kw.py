"""The Kleitman–Winston encoding of independent sets and the two container lemmas.

Given an independent set I and q ≤ |I|, ``kw_run`` repeats q times:
order the surviving set A by max-degree, take the first member of I in that
order, move it to S, and drop everything before it together with its
neighbourhood. The position sequence plus ``A ∩ I`` determines I, and the
position sequence alone determines how A and S evolve, which is what
``kw_reconstruct`` and ``enumerate_containers`` replay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from kwcount.bounds import LogBound, log2_int
from kwcount.errors import MalformedTraceError, PreconditionError, ResourceError
from kwcount.graph import Graph, from_mask, iter_bits, iter_max_degree_order, to_mask

EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class KwStep:
    """Bookkeeping for one iteration, kept for invariant checks."""

    a_size: int  # |A| at the start of the iteration
    j: int
    a_prime_size: int  # |A'|, A' = A minus the j−1 vertices ordered before the pick
    a_prime_edges: int
    pick_degree: int  # deg of the picked vertex inside A'
    max_degree: int  # max degree inside A'
    a_next_size: int


@dataclass(frozen=True)
class KwTrace:
    q: int
    j_seq: tuple[int, ...]
    S: frozenset[int]
    A_final: frozenset[int]
    leftover: frozenset[int]
    steps: tuple[KwStep, ...] = field(default=(), compare=False, repr=False)

    def to_line(self) -> str:
        """``q; j_1,...,j_q; S members; A members``, members comma separated."""
        fields = [
            str(self.q),
            ",".join(map(str, self.j_seq)),
            ",".join(map(str, sorted(self.S))),
            ",".join(map(str, sorted(self.A_final))),
        ]
        return "; ".join(fields)


def parse_trace_line(line: str) -> tuple[int, tuple[int, ...], frozenset[int], frozenset[int]]:
    parts = [p.strip() for p in line.split(";")]
    if len(parts) != 4:
        raise MalformedTraceError(f"expected 4 ';'-separated fields, got {len(parts)}")
    try:
        q = int(parts[0])
        nums = [tuple(int(t) for t in p.split(",")) if p else () for p in parts[1:]]
    except ValueError:
        raise MalformedTraceError(f"non-integer field in {line!r}") from None
    return q, nums[0], frozenset(nums[1]), frozenset(nums[2])


def _step(G: Graph, A: int, j: int) -> tuple[int, int, int]:
    """Apply position j to the surviving set A. Returns (picked vertex, prefix mask, next A)."""
    prefix = 0
    for pos, v in enumerate(iter_max_degree_order(G, A), start=1):
        if pos == j:
            A_next = A & ~prefix & ~(1 << v) & ~G.masks[v]
            return v, prefix, A_next
        prefix |= 1 << v
    raise MalformedTraceError(f"position {j} exceeds |A| = {A.bit_count()}")


def kw_run(G: Graph, I: Iterable[int], q: int) -> KwTrace:
    I_mask = to_mask(I)
    if not G.is_independent(iter_bits(I_mask)):
        raise PreconditionError("input set is not independent")
    if not 0 <= q <= I_mask.bit_count():
        raise PreconditionError(f"q = {q} must lie in [0, |I|] = [0, {I_mask.bit_count()}]")
    A = (1 << G.n) - 1
    S = 0
    j_seq = []
    steps = []
    for _ in range(q):
        prefix = 0
        for j, v in enumerate(iter_max_degree_order(G, A), start=1):
            if (I_mask >> v) & 1:
                break
            prefix |= 1 << v
        a_prime = A & ~prefix
        degs = [(G.masks[u] & a_prime).bit_count() for u in iter_bits(a_prime)]
        A_next = a_prime & ~(1 << v) & ~G.masks[v]
        steps.append(
            KwStep(
                a_size=A.bit_count(),
                j=j,
                a_prime_size=a_prime.bit_count(),
                a_prime_edges=sum(degs) // 2,
                pick_degree=(G.masks[v] & a_prime).bit_count(),
                max_degree=max(degs),
                a_next_size=A_next.bit_count(),
            )
        )
        j_seq.append(j)
        S |= 1 << v
        A = A_next
    return KwTrace(q, tuple(j_seq), from_mask(S), from_mask(A), from_mask(A & I_mask), tuple(steps))


def replay(G: Graph, j_seq: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """(S, A) after applying the position sequence to A = V(G), S = ∅."""
    A = (1 << G.n) - 1
    S = 0
    for j in j_seq:
        if j < 1:
            raise MalformedTraceError(f"position {j} is not positive")
        v, _, A = _step(G, A, j)
        S |= 1 << v
    return from_mask(S), from_mask(A)


def kw_reconstruct(G: Graph, q: int, j_seq: Sequence[int], leftover: Iterable[int]) -> frozenset[int]:
    if len(j_seq) != q:
        raise MalformedTraceError(f"q = {q} but {len(j_seq)} positions given")
    S, _ = replay(G, j_seq)
    return S | frozenset(leftover)


def fingerprint(G: Graph, I: Iterable[int], q: int) -> frozenset[int]:
    return kw_run(G, I, q).S


@dataclass
class ContainerFamily:
    q: int
    entries: dict[frozenset[int], frozenset[int]]
    sequences: dict[frozenset[int], tuple[int, ...]]
    nodes: int = 0

    @property
    def max_size(self) -> int:
        return max((len(c) for c in self.entries.values()), default=0)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.entries.values()]


def enumerate_containers(G: Graph, q: int, node_cap: int = 1_000_000) -> ContainerFamily:
    """All fingerprints S of independent sets with ≥ q elements, with containers f(S).

    Depth-first over position sequences, replaying how A evolves. A branch
    dies if A runs out before q picks.
    """
    if q < 1:
        raise PreconditionError("q must be at least 1")
    raw: dict[int, tuple[int, tuple[int, ...]]] = {}
    nodes = 0

    def dfs(A: int, S: int, seq: tuple[int, ...]):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceError(f"container search exceeded {node_cap} nodes", partial=len(raw))
        if len(seq) == q:
            raw[S] = (A, seq)
            return
        prefix = 0
        for j, v in enumerate(iter_max_degree_order(G, A), start=1):
            if not (G.masks[v] & S):
                dfs(A & ~prefix & ~(1 << v) & ~G.masks[v], S | (1 << v), seq + (j,))
            prefix |= 1 << v

    dfs((1 << G.n) - 1, 0, ())
    entries = {}
    sequences = {}
    for S, (A, seq) in raw.items():
        key = from_mask(S)
        if fingerprint(G, key, q) == key:
            entries[key] = from_mask(A)
            sequences[key] = seq
    return ContainerFamily(q, entries, sequences, nodes)


def lemma1_count_bound(n: int, q: int, R: float, m: int) -> LogBound:
    """log2 of C(n, q)·C(⌊R⌋, m − q), an upper bound on i(G, m) under the density hypothesis."""
    if m < q:
        raise PreconditionError("need m >= q")
    if q < 0 or R < 0:
        raise PreconditionError("need q >= 0 and R >= 0")
    value = log2_int(math.comb(n, q) * math.comb(math.floor(R), m - q))
    return LogBound(value, "kw-lemma1", {"n": n, "q": q, "R": R, "m": m})


@lru_cache(maxsize=256)
def min_induced_edges(G: Graph, cap: int = EXHAUSTIVE_CAP) -> tuple[int, ...]:
    """For each k, the minimum of e_G(U) over all U with |U| = k (exhaustive)."""
    if G.n > cap:
        raise ResourceError(f"exhaustive density scan capped at n = {cap}, got {G.n}")
    masks = np.arange(1 << G.n, dtype=np.int64)
    edges = np.zeros_like(masks)
    for u, v in G.edges():
        edges += (masks >> u) & (masks >> v) & 1
    sizes = np.bitwise_count(masks)
    best = np.full(G.n + 1, np.iinfo(np.int64).max)
    np.minimum.at(best, sizes, edges)
    return tuple(int(x) for x in best)


def _sizes_at_least(G: Graph, R: float) -> range:
    return range(max(0, math.ceil(R)), G.n + 1)


def verify_density_beta(G: Graph, R: float, beta: float, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Every U with |U| ≥ R spans at least β·C(|U|, 2) edges."""
    low = min_induced_edges(G, cap)
    return all(low[k] + 1e-12 >= beta * math.comb(k, 2) for k in _sizes_at_least(G, R))


def verify_density_D(G: Graph, R: float, D: float, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Every U with |U| ≥ R has 2·e(U) ≥ D·|U|."""
    low = min_induced_edges(G, cap)
    return all(2 * low[k] + 1e-12 >= D * k for k in _sizes_at_least(G, R))


def best_beta(G: Graph, R: float, cap: int = EXHAUSTIVE_CAP) -> float:
    """Largest β for which ``verify_density_beta(G, R, β)`` holds (1.0 if no size ≥ 2 qualifies)."""
    low = min_induced_edges(G, cap)
    ratios = [low[k] / math.comb(k, 2) for k in _sizes_at_least(G, R) if k >= 2]
    return min(ratios, default=1.0)


def best_D(G: Graph, R: float, cap: int = EXHAUSTIVE_CAP) -> float:
    """Largest D for which ``verify_density_D(G, R, D)`` holds (inf if no nonempty U qualifies)."""
    low = min_induced_edges(G, cap)
    ratios = [2 * low[k] / k for k in _sizes_at_least(G, R) if k >= 1]
    return min(ratios, default=math.inf)


def eq2_total_bound(n: int, q: int, container_sizes: Iterable[int]) -> LogBound:
    """log2 of Σ_{m<q} C(n, m) + Σ over containers of 2^{|A|}."""
    total = sum(math.comb(n, m) for m in range(q)) + sum(1 << s for s in container_sizes)
    return LogBound(log2_int(total), "kw-total", {"n": n, "q": q})
