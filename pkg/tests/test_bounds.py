import math

import pytest
from hypothesis import given, strategies as st

from kwcount import bounds, oracle
from kwcount.errors import PreconditionError
from kwcount.graph import complete_bipartite, petersen_graph


def test_log2_binomial():
    assert bounds.log2_binomial(10, 2) == pytest.approx(math.log2(45))
    assert bounds.log2_binomial(7.3, 0) == pytest.approx(0, abs=1e-12)
    assert bounds.log2_binomial(5.5, 2) == pytest.approx(math.log2(5.5 * 4.5 / 2))
    assert bounds.log2_binomial(3, 5) == -math.inf
    with pytest.raises(PreconditionError):
        bounds.log2_binomial(5, -1)


@given(st.integers(0, 200), st.integers(0, 200))
def test_log2_binomial_matches_exact(a, b):
    exact = bounds.log2_int(math.comb(a, b))
    got = bounds.log2_binomial(a, b)
    if exact == -math.inf:
        assert got == -math.inf
    else:
        assert got == pytest.approx(exact, abs=1e-9 * max(1.0, exact))


def test_log2_sum():
    assert bounds.log2_sum([1, 1]) == pytest.approx(2)
    assert bounds.log2_sum([-math.inf, 3]) == 3
    assert bounds.log2_sum([]) == -math.inf
    assert bounds.log2_sum([5000, 5000]) == pytest.approx(5001)


def test_sandwich():
    assert bounds.sandwich_bounds(6, 6) == (6, 6)
    assert bounds.sandwich_bounds(0, 0) == (0, 0)
    lo, hi = bounds.sandwich_bounds(2, 4)
    assert lo == 2 and hi == pytest.approx(math.log2(11))


def test_sapozhenko():
    assert bounds.sapozhenko_bound(100, 16, 0).log2_value == 50
    assert bounds.sapozhenko_bound(100, 16, 1).log2_value == pytest.approx(50 * (1 + math.sqrt(math.log(16) / 16)))
    values = [bounds.sapozhenko_bound(1000, d, 1).log2_value for d in range(3, 200)]
    assert all(a > b for a, b in zip(values, values[1:]))
    with pytest.raises(PreconditionError):
        bounds.sapozhenko_bound(10, 1, 1)


def test_kahn_zhao():
    for d in range(1, 9):
        assert bounds.kahn_zhao_bound(2 * d, d).log2_value == pytest.approx(math.log2(2 ** (d + 1) - 1))
    assert bounds.kahn_zhao_bound(2, 1).log2_value == pytest.approx(math.log2(3))
    pet = bounds.kahn_zhao_bound(10, 3).log2_value
    assert pet == pytest.approx(10 / 6 * math.log2(15))
    assert pet == pytest.approx(6.512, abs=1e-3)
    assert pet >= math.log2(oracle.count_independent_sets(petersen_graph()).total)


def test_kahn_zhao_dominates_is_exact():
    total = oracle.count_independent_sets(complete_bipartite(3, 3)).total
    assert bounds.kahn_zhao_dominates(total, 6, 3)
    assert not bounds.kahn_zhao_dominates(total + 1, 6, 3)


def test_kw_c4_bound():
    assert bounds.kw_c4_bound(4, 1).log2_value == pytest.approx(8)
    for n in range(1, 7):
        assert bounds.kw_c4_bound(n, 2).log2_value >= math.log2(oracle.count_c4_free_graphs(n))


def test_ex_below_log_fn():
    for n in range(1, 7):
        count, ex = oracle.c4_free_census(n)
        assert ex <= math.log2(count)


def test_theorem8_bound():
    assert bounds.theorem8_bound(30, 0, 0.5).log2_value == 0
    assert bounds.theorem8_bound(20, 4, 0.5).log2_value == pytest.approx(math.log2(210))
    for m in range(0, 6):
        b = bounds.theorem8_bound(10, m, 1).log2_value
        assert b == pytest.approx(math.log2(math.comb(10, m)))
        assert b >= bounds.log2_int(oracle.count_3ap_free(10, m)) - 1e-9
    assert bounds.theorem8_bound(20, 4, 0.5).provenance == "ap-free-count"


def test_theorem7_failure_bound():
    chain, simple = bounds.theorem7_failure_bound(100, 50, 0.6)
    assert simple.log2_value == -30
    assert chain.log2_value == -math.inf  # C(10, 30) = 0
    chain, simple = bounds.theorem7_failure_bound(10_000, 400, 0.5)
    assert simple.log2_value == -200
    k = math.ceil(0.5 * 400)
    assert (0.5 / 6) * math.e * 10_000 / k * 400 / 10_000 <= 0.5
    assert chain.log2_value <= simple.log2_value


def test_params_text():
    b = bounds.sapozhenko_bound(100, 16, 1.5)
    assert b.params_text() == "n=100;d=16;C=1.5"
