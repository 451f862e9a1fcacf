"""Simple undirected graphs on vertices 0..n-1, vertex orderings, edge-list I/O.

Vertex sets are passed around as ``frozenset[int]``. Internally most of the
heavy lifting is done on integer bitmasks (bit ``v`` set iff ``v`` is in the
set), which ``Graph.masks`` exposes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from kwcount.errors import InputError, PreconditionError

VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    # Optional external names for the vertices, e.g. the integers 1..n of a
    # Cayley-type graph. Vertex ``v`` stands for ``labels[v]``.
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise InputError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"vertex index {u} out of range [0, {self.n})")
                if v not in self.adj[u]:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        if n < 0:
            raise InputError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range [0, {n})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), None if labels is None else tuple(labels))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None (None also for n = 0)."""
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not (self.masks[v] & mask) for v in iter_bits(mask))

    def induced_edges(self, vertices: Iterable[int]) -> int:
        mask = to_mask(vertices)
        return sum((self.masks[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def degree_in(G: Graph, v: int, A: Iterable[int]) -> int:
    """|N_G(v) ∩ A| for a vertex v that belongs to A."""
    A = frozenset(A)
    if v not in A:
        raise PreconditionError(f"vertex {v} is not in the given set")
    return len(G.adj[v] & A)


def iter_max_degree_order(G: Graph, A_mask: int) -> Iterator[int]:
    """Lazily yield the max-degree ordering of the vertex set ``A_mask``.

    Each step extracts a vertex of maximum degree in the subgraph induced by
    what is left, smallest index first on ties.
    """
    masks = G.masks
    deg = {v: (masks[v] & A_mask).bit_count() for v in iter_bits(A_mask)}
    while deg:
        best = max(deg, key=lambda v: (deg[v], -v))
        del deg[best]
        for u in G.adj[best]:
            if u in deg:
                deg[u] -= 1
        yield best


def max_degree_ordering(G: Graph, A: Iterable[int]) -> tuple[int, ...]:
    A_mask = to_mask(A)
    if not A_mask:
        raise PreconditionError("max-degree ordering of an empty set")
    return tuple(iter_max_degree_order(G, A_mask))


def min_degree_ordering(G: Graph) -> tuple[int, ...]:
    """Order v_1..v_n so that v_i has minimum degree in G[v_1..v_i].

    Built from the back: v_n is a minimum-degree vertex of G, v_{n-1} of
    G - v_n, and so on. Ties are removed largest index first, so tied
    vertices appear in increasing index order in the result.
    """
    deg = {v: len(G.adj[v]) for v in range(G.n)}
    back = []
    while deg:
        low = min(deg, key=lambda v: (deg[v], -v))
        del deg[low]
        for u in G.adj[low]:
            if u in deg:
                deg[u] -= 1
        back.append(low)
    return tuple(reversed(back))


def min_degree_property_holds(G: Graph, order: Sequence[int]) -> bool:
    """Check δ(G_{i-1}) ≥ deg_{G_i}(v_i) − 1 for i = 2..n, G_i = G[v_1..v_i]."""
    prefix = 0
    for i, v in enumerate(order):
        if i >= 1:
            min_deg = min((G.masks[u] & prefix).bit_count() for u in iter_bits(prefix))
            if min_deg < (G.masks[v] & prefix).bit_count() - 1:
                return False
        prefix |= 1 << v
    return True


# -- edge-list I/O ---------------------------------------------------------


def _parse_ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {line!r}") from None


def load_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format. Duplicate edges are merged."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty graph document")
    header = _parse_ints(lines[0], 1)
    if len(header) != 2 or min(header) < 0:
        raise InputError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = header
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges, found {len(lines) - 1} edge lines")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        pair = _parse_ints(line, lineno)
        if len(pair) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append(tuple(pair))
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return load_graph(fh.read())


def dump_graph(G: Graph) -> str:
    edges = G.edges()
    return "\n".join([f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# -- standard families -----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    return Graph.from_edges(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(dim) if v < v ^ (1 << k)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_maximal_independent_set(G: Graph, rng: random.Random) -> frozenset[int]:
    order = list(range(G.n))
    rng.shuffle(order)
    chosen = 0
    blocked = 0
    for v in order:
        if not (blocked >> v) & 1:
            chosen |= 1 << v
            blocked |= (1 << v) | G.masks[v]
    return from_mask(chosen)
