import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distinct_degrees import (
    Graph,
    caro_wei_greedy,
    caro_wei_sum,
    complement,
    disjoint_cliques,
    hom,
    max_clique,
    max_independent_set,
    random_graph,
)
from distinct_degrees.errors import CapabilityExceeded
from distinct_degrees.homogeneous import greedy_clique, hom_estimate

import oracles
from strategies import graphs

C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
PETERSEN = Graph.from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)


def test_max_clique_examples():
    assert max_clique(Graph.complete(5)).size == 5
    assert max_clique(C5).size == 2
    assert max_clique(disjoint_cliques(4, 3)).size == 3


def test_max_independent_set_examples():
    assert max_independent_set(Graph.empty(7)).size == 7
    assert max_independent_set(C5).size == 2
    w = max_independent_set(disjoint_cliques(4, 3))
    assert w.size == 4 and w.kind == "independent" and w.is_valid(disjoint_cliques(4, 3))


def test_hom_examples():
    for n in range(6):
        assert hom(Graph.complete(n))[0] == n
        assert hom(Graph.empty(n))[0] == n
    assert hom(disjoint_cliques(4, 3))[0] == 4


def test_hom_g16_against_exhaustive_scan():
    g = random_graph(16, 0.5, 11)
    size, witness = hom(g)
    assert size == oracles.brute_hom(g)
    assert witness.is_valid(g) and witness.size == size


def test_guard():
    with pytest.raises(CapabilityExceeded):
        max_clique(Graph.empty(65))
    assert max_clique(Graph.empty(65), guard=65).size == 1
    est = hom_estimate(random_graph(70, 0.5, 1), seed=3)
    assert not est.exact and est.witness.is_valid(random_graph(70, 0.5, 1))


@given(graphs(max_n=9))
def test_hom_matches_oracle(g):
    size, witness = hom(g)
    assert size == oracles.brute_hom(g)
    assert witness.is_valid(g) and witness.size == size
    assert hom(complement(g))[0] == size


@given(graphs(max_n=9))
def test_independence_number_and_caro_wei(g):
    alpha = max_independent_set(g).size
    assert alpha == oracles.brute_alpha(g)
    cw = caro_wei_sum(g)
    assert cw.total == oracles.caro_wei_fraction(g)
    assert alpha >= math.ceil(cw.total)
    assert cw.total >= cw.weak


def test_caro_wei_randomized_n20():
    for seed in range(30):
        g = random_graph(20, 0.3 + 0.02 * seed, seed)
        cw = caro_wei_sum(g)
        assert max_independent_set(g).size >= math.ceil(cw.total)
        assert cw.total >= cw.weak


def test_caro_wei_sum_examples():
    assert caro_wei_sum(Graph.empty(6)).total == 6
    assert caro_wei_sum(STAR).total == Fraction(7, 4)
    assert caro_wei_sum(PETERSEN).total == Fraction(5, 2)


def test_caro_wei_greedy_examples():
    for seed in range(5):
        assert len(caro_wei_greedy(Graph.empty(6), seed)) == 6
        assert len(caro_wei_greedy(Graph.complete(6), seed)) == 1


@given(graphs(), st.integers(0, 2**32))
def test_caro_wei_greedy_independent_and_deterministic(g, seed):
    s = caro_wei_greedy(g, seed)
    assert oracles.is_independent(oracles.edge_set(g), s.members())
    assert caro_wei_greedy(g, seed) == s


def test_caro_wei_greedy_mean_on_petersen():
    trials = 10_000
    sizes = [len(caro_wei_greedy(PETERSEN, s)) for s in range(trials)]
    mean = sum(sizes) / trials
    var = sum((x - mean) ** 2 for x in sizes) / (trials - 1)
    assert abs(mean - 2.5) <= 3 * math.sqrt(var / trials)


def test_greedy_clique_is_clique():
    g = random_graph(40, 0.5, 2)
    c = greedy_clique(g)
    assert oracles.is_clique(oracles.edge_set(g), c.members())
    assert len(c) <= max_clique(g).size
