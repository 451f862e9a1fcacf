"""Exact brute-force ground truth.

Every count here is an exact Python integer. Most quantities have two
routes: a search (branch and bound or pruned DFS) that scales a little
further, and a vectorised bitmask sweep over every subset for n ≤ 20 that
shares no code with it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from kwcount.errors import InputError, PreconditionError, ResourceError
from kwcount.graph import Graph, iter_bits

IS_CAP = 40
BITMASK_CAP = 20
SUM_FREE_CAP = 24
AP_FREE_CAP = 30
MAX_AP_FREE_CAP = 40
C4_CAP = 6


@dataclass(frozen=True)
class CountTable:
    by_size: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.by_size)

    @property
    def alpha(self) -> int:
        """Largest m with a nonzero count."""
        return max(m for m, c in enumerate(self.by_size) if c)

    def __getitem__(self, m: int) -> int:
        return self.by_size[m] if 0 <= m < len(self.by_size) else 0

    def csv_rows(self) -> list[tuple[str, str]]:
        rows = [(str(m), str(c)) for m, c in enumerate(self.by_size)]
        rows.append(("total", str(self.total)))
        return rows


def _table(counts: Iterable[int]) -> CountTable:
    counts = list(counts)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return CountTable(tuple(int(c) for c in counts))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


# -- independent sets ------------------------------------------------------


def count_independent_sets(G: Graph, cap: int = IS_CAP) -> CountTable:
    """i(G, m) for every m, by branching on a max-degree vertex.

    Subproblems are split into connected components and memoised on the
    remaining-vertex mask.
    """
    if G.n > cap:
        raise ResourceError(f"independent-set counting capped at n = {cap}, got {G.n}")
    masks = G.masks
    memo: dict[int, list[int]] = {0: [1]}

    def component(mask: int) -> int:
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = masks[v] & mask & ~comp
            comp |= new
            frontier |= new
        return comp

    def count(mask: int) -> list[int]:
        if mask in memo:
            return memo[mask]
        comp = component(mask)
        if comp != mask:
            result = _poly_mul(count(comp), count(mask & ~comp))
        else:
            v = max(iter_bits(mask), key=lambda u: (masks[u] & mask).bit_count())
            if not (masks[v] & mask):
                # isolated single vertex: (1 + x)
                result = _poly_mul([1, 1], count(mask & ~(1 << v)))
            else:
                without = count(mask & ~(1 << v))
                with_v = [0] + count(mask & ~(1 << v) & ~masks[v])
                result = _poly_add(without, with_v)
        memo[mask] = result
        return result

    return _table(count((1 << G.n) - 1))


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _tabulate(masks: np.ndarray, good: np.ndarray, n: int) -> CountTable:
    sizes = np.bitwise_count(masks[good])
    return _table(np.bincount(sizes, minlength=n + 1).tolist())


def count_independent_sets_exhaustive(G: Graph, cap: int = BITMASK_CAP) -> CountTable:
    """Same table as ``count_independent_sets``, by testing all 2^n subsets."""
    if G.n > cap:
        raise ResourceError(f"bitmask exhaustion capped at n = {cap}, got {G.n}")
    masks = _all_masks(G.n)
    bad = np.zeros(masks.shape, dtype=bool)
    for u, v in G.edges():
        bad |= ((masks >> u) & (masks >> v) & 1).astype(bool)
    return _tabulate(masks, ~bad, G.n)


def independent_set_masks(G: Graph, cap: int = BITMASK_CAP) -> list[int]:
    """Every independent set of G as a bitmask, in increasing mask order."""
    if G.n > cap:
        raise ResourceError(f"bitmask exhaustion capped at n = {cap}, got {G.n}")
    masks = _all_masks(G.n)
    bad = np.zeros(masks.shape, dtype=bool)
    for u, v in G.edges():
        bad |= ((masks >> u) & (masks >> v) & 1).astype(bool)
    return masks[~bad].tolist()


def independence_number(G: Graph, cap: int = IS_CAP) -> int:
    return count_independent_sets(G, cap).alpha


# -- sum-free sets ---------------------------------------------------------


def _check_positive(A: Iterable[int]) -> list[int]:
    A = sorted(set(A))
    if A and A[0] <= 0:
        raise InputError("elements must be positive integers")
    return A


def is_sum_free(A: Iterable[int]) -> bool:
    """No x, y, z in A with x + y = z (x = y allowed)."""
    A = _check_positive(A)
    members = set(A)
    return not any(z - x in members for z in A for x in A if x < z)


def iter_sum_free(n: int, cap: int = SUM_FREE_CAP):
    """Yield every sum-free subset of [n] as a sorted tuple."""
    if n > cap:
        raise ResourceError(f"sum-free enumeration capped at n = {cap}, got {n}")

    def dfs(start: int, chosen: tuple[int, ...], mask: int, sums: int):
        yield chosen
        for x in range(start, n + 1):
            if not (sums >> x) & 1:
                # new sums: x + a for every chosen a, and x + x
                yield from dfs(x + 1, chosen + (x,), mask | (1 << x), sums | (mask << x) | (1 << (2 * x)))

    yield from dfs(1, (), 0, 0)


def count_sum_free(n: int, cap: int = SUM_FREE_CAP) -> CountTable:
    counts = [0] * (n + 1)
    for A in iter_sum_free(n, cap):
        counts[len(A)] += 1
    return _table(counts)


def count_sum_free_exhaustive(n: int, cap: int = BITMASK_CAP) -> CountTable:
    """SF([n]) by testing every subset; bit i−1 stands for the integer i."""
    if n > cap:
        raise ResourceError(f"bitmask exhaustion capped at n = {cap}, got {n}")
    masks = _all_masks(n)
    bad = np.zeros(masks.shape, dtype=bool)
    for a in range(1, n + 1):
        has_a = ((masks >> (a - 1)) & 1).astype(bool)
        # some x with x and x + a both present
        bad |= has_a & ((masks & (masks >> a)) != 0)
    return _tabulate(masks, ~bad, n)


# -- 3-term arithmetic progressions ----------------------------------------


def iter_3aps(n: int):
    for d in range(1, (n - 1) // 2 + 1):
        for x in range(1, n - 2 * d + 1):
            yield (x, x + d, x + 2 * d)


def count_3aps(B: Iterable[int], n: int | None = None) -> int:
    B = set(B)
    if n is not None and any(not 1 <= b <= n for b in B):
        raise PreconditionError(f"set is not contained in [1, {n}]")
    return sum(1 for x in B for y in B if x < y and 2 * y - x in B)


def ap_free_table(B: Iterable[int], cap: int = AP_FREE_CAP) -> CountTable:
    """a(B, m) for every m: m-subsets of B containing no 3-term AP."""
    B = sorted(set(_check_positive(B)))
    if len(B) > cap:
        raise ResourceError(f"3-AP-free enumeration capped at |B| = {cap}, got {len(B)}")
    counts = [0] * (len(B) + 1)

    def dfs(i: int, chosen: int, forbidden: int, size: int):
        counts[size] += 1
        for k in range(i, len(B)):
            x = B[k]
            if (forbidden >> x) & 1:
                continue
            extra = 0
            for a in iter_bits(chosen):
                extra |= 1 << (2 * x - a)
            dfs(k + 1, chosen | (1 << x), forbidden | extra, size + 1)

    dfs(0, 0, 0, 0)
    return _table(counts)


def count_3ap_free(n: int, m: int, cap: int = AP_FREE_CAP) -> int:
    """a(n, m) for the interval [n]."""
    return ap_free_table(range(1, n + 1), cap)[m]


def count_3ap_free_in(B: Iterable[int], m: int, cap: int = AP_FREE_CAP) -> int:
    return ap_free_table(B, cap)[m]


def ap_free_table_exhaustive(n: int, cap: int = BITMASK_CAP) -> CountTable:
    """3-AP-free subsets of [n] by size, testing every subset."""
    if n > cap:
        raise ResourceError(f"bitmask exhaustion capped at n = {cap}, got {n}")
    masks = _all_masks(n)
    bad = np.zeros(masks.shape, dtype=bool)
    for d in range(1, n):
        bad |= (masks & (masks >> d) & (masks >> (2 * d))) != 0
    return _tabulate(masks, ~bad, n)


def max_3ap_free_subset(A: Iterable[int], cap: int = MAX_AP_FREE_CAP, target: int | None = None) -> int:
    """Size of a largest 3-AP-free subset of A, by branch and bound.

    With ``target`` the search stops as soon as a subset of that size is
    found, so the result is exact only when it is below ``target``.
    """
    A = sorted(set(_check_positive(A)))
    if len(A) > cap:
        raise ResourceError(f"3-AP-free maximisation capped at |A| = {cap}, got {len(A)}")
    suffix = [0] * (len(A) + 1)
    for k in range(len(A) - 1, -1, -1):
        suffix[k] = suffix[k + 1] | (1 << A[k])
    best = min(len(A), 2)
    if target is not None and best >= target:
        return best

    class Done(Exception):
        pass

    def dfs(i: int, chosen: int, forbidden: int, size: int):
        nonlocal best
        if size > best:
            best = size
            if target is not None and best >= target:
                raise Done
        if size + (suffix[i] & ~forbidden).bit_count() <= best:
            return
        for k in range(i, len(A)):
            x = A[k]
            if (forbidden >> x) & 1:
                continue
            if size + (suffix[k] & ~forbidden).bit_count() <= best:
                return
            extra = 0
            for a in iter_bits(chosen):
                extra |= 1 << (2 * x - a)
            dfs(k + 1, chosen | (1 << x), forbidden | extra, size + 1)

    try:
        dfs(0, 0, 0, 0)
    except Done:
        pass
    return best


@lru_cache(maxsize=1 << 16)
def _mask_has_ap(mask: int) -> bool:
    top = mask.bit_length()
    return any(mask & (mask >> d) & (mask >> (2 * d)) for d in range(1, top // 2 + 1))


def is_delta_roth_direct(A: Iterable[int], delta: float, cap: int = 16) -> bool:
    """Every B ⊆ A with |B| ≥ δ|A| contains a 3-term AP, checked subset by subset."""
    A = sorted(set(_check_positive(A)))
    if len(A) > cap:
        raise ResourceError(f"direct δ-Roth check capped at |A| = {cap}, got {len(A)}")
    if not A:
        return True  # vacuous, matching is_delta_roth
    threshold = delta * len(A)
    full = sum(1 << x for x in A)
    sub = full
    while True:
        if sub.bit_count() >= threshold and not _mask_has_ap(sub):
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & full


# -- C4-free graphs --------------------------------------------------------


def has_c4(G: Graph) -> bool:
    """True iff two distinct vertices share at least two common neighbours."""
    masks = G.masks
    return any((masks[u] & masks[v]).bit_count() >= 2 for u in range(G.n) for v in range(u + 1, G.n))


def c4_free_census(n: int, cap: int = C4_CAP) -> tuple[int, int]:
    """(f_n(C4), ex(n, C4)) over all 2^C(n,2) labelled graphs on n vertices."""
    if n > cap:
        raise ResourceError(f"C4-free enumeration capped at n = {cap}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    ex = 0
    for code in range(1 << len(pairs)):
        nbr = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (code >> k) & 1:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
        if all((nbr[u] & nbr[v]).bit_count() < 2 for u, v in pairs):
            count += 1
            ex = max(ex, code.bit_count())
    return count, ex


def count_c4_free_graphs(n: int, cap: int = C4_CAP) -> int:
    return c4_free_census(n, cap)[0]
