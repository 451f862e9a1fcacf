"""Cross-module invariant checks over a catalog of small graphs.

Each ``check_*`` function takes one graph and returns a ``CheckResult``
(instances examined, failure witnesses) or None when the check does not
apply to that graph. ``verify_suite`` runs all of them over a catalog and
aggregates one row per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from kwcount import c4, kw, oracle, spectral
from kwcount.bounds import kahn_zhao_dominates, log2_int, sandwich_bounds, sapozhenko_bound
from kwcount.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_mask,
    hypercube,
    max_degree_ordering,
    min_degree_ordering,
    min_degree_property_holds,
    path_graph,
    petersen_graph,
)

KW_EXHAUSTIVE_N = 14
LEMMA_N = 12
SPECTRAL_N = 12
C4_EXTENSION_N = 8
C4_SUBSET_N = 10
C4_WITNESS_N = 12


@dataclass
class SuiteConfig:
    sapozhenko_C: float = 1.0
    eigen_epsilon: float = 0.1
    eigen_C: float = 4.0
    beta_grid: tuple[float, ...] = tuple(k / 10 for k in range(11))
    D_grid: tuple[float, ...] = tuple(k / 2 for k in range(25))


@dataclass
class CheckResult:
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, witness: str):
        self.failures.append(witness)


@dataclass
class ReportRow:
    check: str
    instances: int
    failures: int
    witness: str = ""


def builtin_catalog(max_n: int = 12) -> list[tuple[str, Graph]]:
    cat = [(f"P{n}", path_graph(n)) for n in range(2, max_n + 1)]
    cat += [(f"C{n}", cycle_graph(n)) for n in range(3, max_n + 1)]
    cat += [(f"K{n}", complete_graph(n)) for n in range(2, max_n + 1)]
    cat += [(f"K{d},{d}", complete_bipartite(d, d)) for d in range(1, max_n // 2 + 1)]
    if max_n >= 8:
        cat.append(("Q3", hypercube(3)))
    if max_n >= 10:
        cat.append(("Petersen", petersen_graph()))
    return cat


def regular_catalog(max_n: int = 12) -> list[tuple[str, Graph]]:
    return [(name, G) for name, G in builtin_catalog(max_n) if G.regular_degree() and G.n <= max_n]


def _fmt_set(s) -> str:
    return "{" + " ".join(map(str, sorted(s))) + "}"


# -- graph core and oracle -------------------------------------------------


def check_orderings(G: Graph, cfg: SuiteConfig) -> CheckResult:
    res = CheckResult(1)
    order = min_degree_ordering(G)
    if sorted(order) != list(range(G.n)) or not min_degree_property_holds(G, order):
        res.fail(f"min-degree ordering {order}")
    if G.n:
        first = max_degree_ordering(G, range(G.n))[0]
        if G.degree(first) != max(G.degree(v) for v in range(G.n)):
            res.fail(f"max-degree ordering starts at {first}")
    return res


def check_oracle_agreement(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    if G.n > oracle.BITMASK_CAP:
        return None
    res = CheckResult(1)
    a, b = oracle.count_independent_sets(G), oracle.count_independent_sets_exhaustive(G)
    if a != b:
        res.fail(f"branch-and-bound {a.by_size} vs bitmask {b.by_size}")
    return res


def check_sandwich(G: Graph, cfg: SuiteConfig) -> CheckResult:
    res = CheckResult(1)
    table = oracle.count_independent_sets(G)
    lo, hi = sandwich_bounds(table.alpha, G.n)
    total = table.total
    if not (total >= 2**table.alpha and total <= sum(math.comb(G.n, m) for m in range(table.alpha + 1))):
        res.fail(f"i(G)={total}, log2 sandwich=({lo}, {hi})")
    return res


def check_kahn_zhao(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    d = G.regular_degree()
    if not d:
        return None
    res = CheckResult(1)
    total = oracle.count_independent_sets(G).total
    if not kahn_zhao_dominates(total, G.n, d):
        res.fail(f"i(G)={total} n={G.n} d={d}")
    return res


def check_sapozhenko(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    d = G.regular_degree()
    if d is None or d < 2:
        return None
    res = CheckResult(1)
    total = oracle.count_independent_sets(G).total
    bound = sapozhenko_bound(G.n, d, cfg.sapozhenko_C)
    if log2_int(total) > bound.log2_value + 1e-9:
        res.fail(f"log2 i(G)={log2_int(total):.12g} > {bound.log2_value:.12g} (C={cfg.sapozhenko_C})")
    return res


# -- kw engine -------------------------------------------------------------


def check_kw_trace(G: Graph, I: frozenset[int], q: int) -> list[str]:
    """Invertibility, fingerprint idempotence, the position-sum law and per-step shrinkage."""
    problems = []
    trace = kw.kw_run(G, I, q)
    if kw.kw_reconstruct(G, q, trace.j_seq, trace.leftover) != I:
        problems.append("reconstruction")
    if kw.fingerprint(G, trace.S, q) != trace.S:
        problems.append("idempotence")
    if not (trace.S <= I and I - trace.S <= trace.A_final):
        problems.append("S ⊆ I ⊆ S ∪ A")
    if sum(trace.j_seq) > G.n - len(trace.A_final):
        problems.append("position sum")
    for st in trace.steps:
        if st.pick_degree != st.max_degree:
            problems.append("greedy maximality")
        removed = st.a_size - st.a_next_size
        if st.a_prime_size >= 2:
            density = st.a_prime_edges / math.comb(st.a_prime_size, 2)
            # |A_next| ≤ |A| − j − β'(|A'| − 1) ≤ (1 − β')|A|
            if removed < st.j + density * (st.a_prime_size - 1) - 1e-9 or st.a_next_size > (1 - density) * st.a_size + 1e-9:
                problems.append("shrink law")
    return problems


def check_kw_invertibility(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    if G.n > KW_EXHAUSTIVE_N:
        return None
    res = CheckResult()
    for mask in oracle.independent_set_masks(G):
        I = from_mask(mask)
        for q in range(len(I) + 1):
            res.instances += 1
            bad = check_kw_trace(G, I, q)
            if bad:
                res.fail(f"I={_fmt_set(I)} q={q}: {', '.join(bad)}")
    return res


def check_lemma1(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    """i(G, m) ≤ C(n, q)·C(⌊R⌋, m − q) at every grid point meeting the density hypotheses."""
    if G.n > LEMMA_N:
        return None
    n = G.n
    table = oracle.count_independent_sets(G)
    res = CheckResult()
    for R in range(n + 1):
        top = kw.best_beta(G, R)
        betas = sorted({b for b in cfg.beta_grid if b <= top} | {min(top, 1.0)})
        for beta in betas:
            if not kw.verify_density_beta(G, R, beta):
                continue
            for q in range(n + 1):
                if R < math.exp(-beta * q) * n:
                    continue
                res.instances += 1
                for m in range(q, n + 1):
                    if table[m] > math.comb(n, q) * math.comb(R, m - q):
                        res.fail(f"q={q} R={R} beta={beta:.6g} m={m}: i={table[m]}")
    return res


def check_lemma2(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    """Containers cover every independent set; their size respects R under the hypotheses."""
    if G.n > LEMMA_N:
        return None
    n = G.n
    sets = [from_mask(m) for m in oracle.independent_set_masks(G)]
    alpha = max(len(I) for I in sets)
    res = CheckResult()
    for q in range(1, alpha + 1):
        family = kw.enumerate_containers(G, q)
        for I in sets:
            if len(I) < q:
                continue
            res.instances += 1
            g = kw.fingerprint(G, I, q)
            if g not in family.entries or not (g <= I <= family.entries[g] | g):
                res.fail(f"q={q} I={_fmt_set(I)} not covered")
        for R in range(n + 1):
            top = kw.best_D(G, R)
            for D in sorted({x for x in cfg.D_grid if x <= top} | ({top} if math.isfinite(top) else set())):
                if R + q * D < n:
                    continue
                res.instances += 1
                if family.max_size > R:
                    res.fail(f"q={q} R={R} D={D:.6g}: container of size {family.max_size}")
    return res


# -- spectral --------------------------------------------------------------


def check_spectral(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    d = G.regular_degree()
    if not d or G.n > SPECTRAL_N:
        return None
    res = CheckResult(1 << G.n)
    ok, worst, where = spectral.alon_chung_exhaustive(G)
    if not ok:
        res.fail(f"Alon-Chung slack {worst:.3g} at {_fmt_set(where)}")
    eig = spectral.adjacency_spectrum(G)
    if abs(eig.sum()) > 1e-6 or abs((eig**2).sum() - 2 * G.num_edges) > 1e-6:
        res.fail(f"trace sanity: sum={eig.sum():.3g} sumsq={(eig ** 2).sum():.6g} 2e={2 * G.num_edges}")
    alpha = oracle.independence_number(G)
    hoff = spectral.hoffman_bound(G.n, d, float(eig[0]))
    if alpha > hoff + 1e-6:
        res.fail(f"alpha={alpha} > Hoffman {hoff:.12g}")
    return res


def check_eigenvalue_count(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    d = G.regular_degree()
    if not d or G.n > SPECTRAL_N:
        return None
    lam = -spectral.smallest_eigenvalue(G)
    table = oracle.count_independent_sets(G)
    res = CheckResult()
    for m in range(G.n + 1):
        if not spectral.eigenvalue_bound_applies(G.n, d, m, cfg.eigen_C):
            continue
        bound = spectral.eigenvalue_count_bound(G.n, d, lam, cfg.eigen_epsilon, m)
        if math.isinf(bound.log2_value) and bound.log2_value > 0:
            continue
        res.instances += 1
        if log2_int(table[m]) > bound.log2_value + 1e-9:
            res.fail(f"m={m}: i={table[m]} > 2^{bound.log2_value:.6g}")
    return res


def smallest_passing_eigen_C(catalog, epsilon: float, grid=None) -> float:
    """Smallest C on the grid for which the eigenvalue count bound holds on every catalog graph."""
    if grid is None:
        grid = [k / 4 for k in range(0, 81)]
    for C in grid:
        cfg = SuiteConfig(eigen_epsilon=epsilon, eigen_C=C)
        if all(not (r := check_eigenvalue_count(G, cfg)) or not r.failures for _, G in catalog):
            return C
    return math.inf


# -- C4 pipeline -----------------------------------------------------------


def check_c4_extensions(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    if G.n > C4_EXTENSION_N or oracle.has_c4(G):
        return None
    H = c4.square_graph(G).square
    table = oracle.count_independent_sets(H)
    res = CheckResult()
    for d in range(G.n + 1):
        res.instances += 1
        a, b, direct = c4.count_c4_extensions(G, d), table[d], c4.count_c4_extensions_direct(G, d)
        if not a == b == direct:
            res.fail(f"d={d}: extensions={a} i(H,d)={b} direct={direct}")
    return res


def check_c4_witnesses(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    if G.n > C4_WITNESS_N or oracle.has_c4(G):
        return None
    H = c4.square_graph(G).square
    res = CheckResult()
    for x, y in H.edges():
        res.instances += 1
        if len(c4.witnesses(G, x, y)) != 1:
            res.fail(f"H-edge {x}{y} has witnesses {c4.witnesses(G, x, y)}")
    return res


def check_eh_identity(G: Graph, cfg: SuiteConfig) -> CheckResult | None:
    if G.n > C4_SUBSET_N or oracle.has_c4(G):
        return None
    res = CheckResult()
    for mask in range(1 << G.n):
        res.instances += 1
        if not c4.eh_identity_check(G, from_mask(mask)):
            res.fail(f"B={_fmt_set(from_mask(mask))}")
    return res


CHECKS = {
    "orderings": check_orderings,
    "oracle-agreement": check_oracle_agreement,
    "sandwich": check_sandwich,
    "kahn-zhao": check_kahn_zhao,
    "sapozhenko": check_sapozhenko,
    "kw-invertibility": check_kw_invertibility,
    "lemma1": check_lemma1,
    "lemma2": check_lemma2,
    "spectral": check_spectral,
    "eigenvalue-count": check_eigenvalue_count,
    "c4-extensions": check_c4_extensions,
    "c4-witnesses": check_c4_witnesses,
    "eh-identity": check_eh_identity,
}


def verify_suite(catalog, config: SuiteConfig | None = None, checks=None) -> list[ReportRow]:
    """Run every applicable check on every catalog graph; one row per check that ran."""
    cfg = config or SuiteConfig()
    rows = []
    for name, fn in CHECKS.items():
        if checks is not None and name not in checks:
            continue
        instances = 0
        failures = 0
        witness = ""
        ran = False
        for gname, G in catalog:
            res = fn(G, cfg)
            if res is None:
                continue
            ran = True
            instances += res.instances
            failures += len(res.failures)
            if res.failures and not witness:
                witness = f"{gname}: {res.failures[0]}"
        if ran:
            rows.append(ReportRow(name, instances, failures, witness))
    return rows
