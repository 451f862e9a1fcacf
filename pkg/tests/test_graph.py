import random

import pytest
from hypothesis import given, settings, strategies as st

from kwcount.errors import InputError, PreconditionError
from kwcount.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_in,
    dump_graph,
    empty_graph,
    from_mask,
    gnp,
    hypercube,
    iter_bits,
    load_graph,
    max_degree_ordering,
    min_degree_ordering,
    min_degree_property_holds,
    path_graph,
    petersen_graph,
    random_maximal_independent_set,
    star_graph,
    to_mask,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_load_path():
    G = load_graph("3 2\n0 1\n1 2")
    assert G == path_graph(3)
    assert G.edges() == [(0, 1), (1, 2)]


def test_load_empty():
    G = load_graph("2 0")
    assert G.n == 2 and G.num_edges == 0


@pytest.mark.parametrize(
    "text",
    ["2 1\n0 0", "2 1\n0 2", "3 1\n0 x", "3 2\n0 1", "", "3\n0 1", "2 1\n0 1 1", "-1 0"],
)
def test_load_rejects(text):
    with pytest.raises(InputError):
        load_graph(text)


def test_load_ignores_blank_lines_and_duplicates_are_rejected():
    assert load_graph("3 1\n\n0 2\n") == Graph.from_edges(3, [(0, 2)])


def test_asymmetric_adjacency_rejected():
    with pytest.raises(InputError):
        Graph(2, (frozenset({1}), frozenset()))


@given(graphs())
def test_dump_load_roundtrip(G):
    assert load_graph(dump_graph(G)) == G


def test_degree_in(p3):
    assert degree_in(p3, 1, {0, 1, 2}) == 2
    assert degree_in(p3, 1, {1, 2}) == 1
    assert degree_in(p3, 1, {1}) == 0
    with pytest.raises(PreconditionError):
        degree_in(p3, 0, {1, 2})


def test_max_degree_ordering_examples(p3, c4, empty3):
    assert max_degree_ordering(p3, {0, 1, 2}) == (1, 0, 2)
    assert max_degree_ordering(empty3, {0, 1, 2}) == (0, 1, 2)
    assert max_degree_ordering(c4, range(4)) == (0, 2, 1, 3)
    with pytest.raises(PreconditionError):
        max_degree_ordering(p3, set())


@given(graphs(), st.data())
def test_max_degree_ordering_is_greedy(G, data):
    A = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), min_size=1)) if G.n else None
    if A is None:
        return
    order = max_degree_ordering(G, A)
    assert sorted(order) == sorted(A)
    remaining = set(A)
    for v in order:
        degs = {u: degree_in(G, u, remaining) for u in remaining}
        best = max(degs.values())
        assert degs[v] == best
        assert v == min(u for u in remaining if degs[u] == best)
        remaining.remove(v)


def test_min_degree_ordering_examples():
    star = star_graph(3)
    assert min_degree_property_holds(star, min_degree_ordering(star))
    assert min_degree_ordering(empty_graph(5)) == (0, 1, 2, 3, 4)
    K = complete_graph(5)
    assert min_degree_property_holds(K, (4, 2, 0, 3, 1))


@given(graphs())
def test_min_degree_ordering_property(G):
    order = min_degree_ordering(G)
    assert sorted(order) == list(range(G.n))
    assert min_degree_property_holds(G, order)


def test_families():
    assert cycle_graph(5).regular_degree() == 2
    assert complete_bipartite(3, 3).regular_degree() == 3
    assert hypercube(3).regular_degree() == 3 and hypercube(3).n == 8
    P = petersen_graph()
    assert P.n == 10 and P.num_edges == 15 and P.regular_degree() == 3
    assert star_graph(3).degree(0) == 3
    assert path_graph(4).regular_degree() is None


def test_masks_roundtrip():
    assert to_mask({0, 3}) == 9
    assert list(iter_bits(9)) == [0, 3]
    assert from_mask(9) == frozenset({0, 3})


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1), st.integers(1, 14), st.sampled_from([0.1, 0.3, 0.5]))
def test_random_maximal_independent_set(seed, n, p):
    rng = random.Random(seed)
    G = gnp(n, p, rng)
    I = random_maximal_independent_set(G, rng)
    assert G.is_independent(I)
    assert all(G.adj[v] & I for v in range(n) if v not in I)
