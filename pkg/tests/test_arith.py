import itertools
import math
import random

import pytest

from kwcount import arith, oracle
from kwcount.errors import NotApplicableError, PreconditionError, ResourceError
from kwcount.graph import cycle_graph


def labelled_edges(G):
    return {frozenset((G.label(u), G.label(v))) for u, v in G.edges()}


def test_gs_examples():
    G = arith.build_gs_graph(5, {1})
    assert labelled_edges(G) == {frozenset(p) for p in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]}
    assert arith.build_gs_graph(4, {1}) == cycle_graph(4)
    G = arith.build_gs_graph(6, {2})
    assert labelled_edges(G) == {frozenset(p) for p in [(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6)]}


def test_gs_rejects():
    with pytest.raises(PreconditionError):
        arith.build_gs_graph(6, {3})
    with pytest.raises(PreconditionError):
        arith.build_gs_graph(6, set())
    with pytest.raises(PreconditionError):
        arith.build_gs_graph(6, {0})


@pytest.mark.parametrize("n", [3, 8, 13, 20])
def test_gs_regular_all_shift_sets(n):
    shifts = range(1, arith.gs_shift_limit(n) + 1)
    for k in range(1, len(shifts) + 1):
        for S in itertools.combinations(shifts, k):
            assert arith.build_gs_graph(n, S).regular_degree() == 2 * k


def test_sum_free_independence_examples():
    with pytest.raises(NotApplicableError):
        arith.sum_free_independence_check({11, 13, 15, 17, 19}, 2, 20)
    assert arith.sum_free_independence_check({3, 4, 9, 10}, 2, 20)
    assert arith.sum_free_independence_check({5, 7}, 2, 20)
    with pytest.raises(PreconditionError):
        arith.sum_free_independence_check({1, 2}, 1, 20)


def test_sum_free_independence_all_small():
    for A in oracle.iter_sum_free(12):
        for t in range(1, len(A) + 1):
            try:
                assert arith.sum_free_independence_check(A, t, 12)
            except NotApplicableError:
                pass


def test_theorem4_pipeline_trend():
    ratios = [arith.theorem4_pipeline(10**k, 10).log2_value / 10**k for k in (3, 6, 9, 12)]
    assert ratios == pytest.approx([1.671608, 0.689317, 0.528897, 0.503886], abs=1e-6)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < 0.51
    for n in (8, 20):
        assert arith.theorem4_pipeline(n, 10).log2_value >= math.log2(oracle.count_sum_free(n).total)
    with pytest.raises(PreconditionError):
        arith.theorem4_pipeline(7, 10)


def test_3ap_hypergraph():
    assert len(arith.build_3ap_hypergraph(5).triples) == 4
    assert arith.build_3ap_hypergraph(3).triples == ((1, 2, 3),)
    assert arith.build_3ap_hypergraph(2).triples == ()
    ap = arith.build_3ap_hypergraph(5)
    assert ap.degree(3) == 4
    assert ap.degree(1) == 2
    assert ap.degree(3, within={1, 2, 3}) == 1


def test_high_degree_elements():
    ap = arith.build_3ap_hypergraph(5)
    assert arith.high_degree_elements(range(1, 6), ap, 3) == {3}
    assert arith.high_degree_elements(range(1, 6), ap, 2) == {1, 2, 3, 4, 5}


def test_gw_graph_examples():
    ap = arith.build_3ap_hypergraph(5)
    G = arith.build_gw_graph(range(1, 6), {3}, ap)
    assert labelled_edges(G) == {frozenset(p) for p in [(1, 2), (2, 4), (4, 5), (1, 5)]}
    assert arith.gw_witnesses(range(1, 6), {3}, ap)[(1, 5)] == [3]
    assert arith.build_gw_graph(range(1, 6), set(), ap).num_edges == 0
    with pytest.raises(PreconditionError):
        arith.build_gw_graph({1, 2}, {3}, ap)


def test_gw_degree_cap_random():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(3, 30)
        ap = arith.build_3ap_hypergraph(n)
        B = rng.sample(range(1, n + 1), rng.randint(1, n))
        W = rng.sample(B, rng.randint(0, len(B)))
        G = arith.build_gw_graph(B, W, ap)
        assert all(G.degree(v) <= 3 * len(W) for v in range(G.n))


def test_is_delta_roth_examples():
    assert arith.is_delta_roth(range(1, 6), 0.9)
    assert not arith.is_delta_roth(range(1, 6), 0.8)
    assert arith.is_delta_roth([], 0.5)
    with pytest.raises(ResourceError):
        arith.is_delta_roth(range(1, 42), 0.5)


def test_is_delta_roth_matches_direct_sample():
    rng = random.Random(3)
    for _ in range(200):
        A = rng.sample(range(1, 16), rng.randint(0, 12))
        for delta in (0.3, 0.6, 0.8):
            assert arith.is_delta_roth(A, delta) == oracle.is_delta_roth_direct(A, delta)


def test_roth_experiment():
    for delta in (0.5, 0.7, 0.9):
        est = arith.roth_random_experiment(12, 12, delta, 5, 0)
        assert est.rate == float(arith.is_delta_roth(range(1, 13), delta))
    a = arith.roth_random_experiment(30, 10, 0.7, 40, 11)
    b = arith.roth_random_experiment(30, 10, 0.7, 40, 11)
    assert a == b
    with pytest.raises(PreconditionError):
        arith.roth_random_experiment(10, 5, 0.5, 0, 1)
    with pytest.raises(PreconditionError):
        arith.roth_random_experiment(10, 11, 0.5, 3, 1)


def test_roth_trial_reproducible_alone():
    # trial i is fixed by seed ^ i, independent of how many trials run
    many = arith.roth_random_experiment(30, 10, 0.6, 25, 5)
    parts = sum(
        arith.is_delta_roth(random.Random(5 ^ i).sample(range(1, 31), 10), 0.6) for i in range(25)
    )
    assert many.successes == parts


def test_recursion_bound():
    assert arith.theorem8_recursion_bound(100, 30, 0.5, 0.01, K=0).log2_value == -math.inf
    assert arith.theorem8_recursion_bound(100, 10, 0.5, 0.01, K=0).log2_value == pytest.approx(
        math.log2(math.comb(25, 10))
    )
    assert arith.theorem8_recursion_bound(100, 60, 0.5, 0.01, K=2).log2_value == pytest.approx(193.604026090, abs=1e-6)
    with pytest.raises(PreconditionError):
        arith.theorem8_recursion_bound(100, 30, 0.5, 0.01, K=2)


def test_recursion_states():
    states = arith.roth_recursion_states(100, 60, 0.5, 0.12, K=3)
    assert [s.step for s in states] == [0, 1, 2, 3]
    assert [s.m_remaining for s in states] == [60, 40, 20, 0]
    assert [s.n_prime for s in states] == [100, 99, 98, 97]
    assert arith.default_recursion_depth(0.5, 0.5) == 18


def test_varnavides():
    assert arith.varnavides_profile(9, 1.0) == (16, 16 / 81)
    low, _ = arith.varnavides_profile(9, 8 / 9)
    subsets = [set(range(1, 10))] + [set(range(1, 10)) - {x} for x in range(1, 10)]
    assert low == min(oracle.count_3aps(B) for B in subsets) == 8
    assert arith.varnavides_profile(12, 0.5)[0] == 0
    with pytest.raises(ResourceError):
        arith.varnavides_profile(23, 0.5)
