import math

import pytest

from kwcount import c4, oracle
from kwcount.errors import PreconditionError
from kwcount.graph import complete_bipartite, complete_graph, cycle_graph, petersen_graph, star_graph


def test_square_graph_examples(p3):
    H = c4.square_graph(star_graph(3)).square
    assert H.edges() == [(1, 2), (1, 3), (2, 3)] and H.degree(0) == 0
    assert c4.square_graph(p3).square.edges() == [(0, 2)]
    assert c4.square_graph(complete_graph(2)).square.num_edges == 0


def test_witnesses(p3):
    assert c4.witnesses(p3, 0, 2) == [1]
    assert c4.witnesses(complete_bipartite(2, 2), 0, 1) == [2, 3]


def test_extension_examples(p3):
    assert c4.count_c4_extensions(complete_graph(2), 2) == 1
    assert c4.count_c4_extensions(p3, 2) == 2
    assert c4.count_c4_extensions(petersen_graph(), 0) == 1
    assert c4.count_c4_extensions_direct(p3, 2) == 2


def test_extensions_equal_independent_set_counts():
    for G in [petersen_graph(), cycle_graph(7), star_graph(5)]:
        H = c4.square_graph(G).square
        table = oracle.count_independent_sets(H)
        for d in range(G.n + 1):
            assert c4.count_c4_extensions(G, d) == table[d] == c4.count_c4_extensions_direct(G, d)


def test_c4_graph_rejected():
    K = complete_bipartite(2, 2)
    for f in (c4.count_c4_extensions, c4.count_c4_extensions_direct):
        with pytest.raises(PreconditionError):
            f(K, 1)
    with pytest.raises(PreconditionError):
        c4.eh_identity_check(K, {0})


def test_eh_identity_examples(p3):
    assert c4.eh_identity_check(star_graph(3), {1, 2, 3})
    assert c4.square_graph(star_graph(3)).square.induced_edges({1, 2, 3}) == 3
    assert c4.eh_identity_check(petersen_graph(), set())
    assert c4.eh_identity_check(p3, {0, 2})


def test_attach_vertex(p3):
    G = c4.attach_vertex(p3, [0, 2])
    assert G.n == 4 and oracle.has_c4(G)


def test_gn_bound():
    assert c4.gn_bound(10, 1).log2_value == pytest.approx(math.log2(10))
    b = c4.gn_bound(10**4, 10)
    assert b.provenance == "c4-extensions(small-d)"
    assert b.log2_value == pytest.approx(math.log2(math.comb(10**4, 10)))
    assert c4.gn_bound(10**4, 200).provenance == "c4-extensions(kw)"
    with pytest.raises(PreconditionError):
        c4.gn_bound(10, 0)
    with pytest.raises(PreconditionError):
        c4.gn_bound(10, 3, q_rule="other")


def test_gn_bound_dominates_extensions():
    # C4-free graphs of min degree >= d - 1 are rare at small n; cycles give d <= 3
    for G in [cycle_graph(n) for n in range(5, 11)] + [petersen_graph()]:
        for d in range(1, 4):
            assert c4.gn_bound(G.n, d).log2_value >= math.log2(max(c4.count_c4_extensions(G, d), 1)) - 1e-9


def test_fn_assembly():
    expected_n2 = 2 * math.log2(2) + c4.gn_max(1)
    assert c4.fn_c4_bound_assembly(2).log2_value == pytest.approx(expected_n2)
    frozen = [2.0, 6.169925, 14.076816, 23.528027, 34.189805, 45.848909, 58.356703]
    got = [c4.fn_c4_bound_assembly(n).log2_value for n in range(2, 9)]
    assert got == pytest.approx(frozen, abs=1e-6)
    for n in range(2, 7):
        assert got[n - 2] >= math.log2(oracle.count_c4_free_graphs(n))
    with pytest.raises(PreconditionError):
        c4.fn_c4_bound_assembly(1)


def test_fn_assembly_scaling():
    r100 = c4.fn_c4_bound_assembly(100).log2_value / 100**1.5
    r1000 = c4.fn_c4_bound_assembly(1000).log2_value / 1000**1.5
    assert r1000 < r100
    assert c4.fn_c4_bound_assembly(100, "polylog").log2_value >= c4.fn_c4_bound_assembly(100).log2_value - 1e-9


def test_implied_claim_constant():
    assert c4.implied_claim_constant(1) == 0
    assert c4.implied_claim_constant(10) == pytest.approx(c4.gn_max(10) * math.log(2) / math.sqrt(10))
    with pytest.raises(PreconditionError):
        c4.implied_claim_constant(0)
