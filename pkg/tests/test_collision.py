import math
from decimal import Decimal
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distinct_degrees import Graph, complement, hom, nbhd_distance, random_graph
from distinct_degrees.collision import (
    ApproxProb,
    CollisionParams,
    below_collision_bound,
    central_binomial_ok,
    collision_params,
    collision_prob_exact,
    collision_prob_pair,
    degree_graph_edge_prob,
    distance_mass,
    distance_sum_terms,
    expected_degree_graph_edges,
    lemma31_bound,
    collision_bound_chain,
    pair_collision_bound_ok,
)
from distinct_degrees.degree_diversity import degree_classes, sample_subset
from distinct_degrees.errors import InvalidPairError
from distinct_degrees.graph_core import VertexSet

import oracles
from strategies import graph_and_pair, graphs

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
K2 = Graph.complete(2)


def test_collision_prob_exact_examples():
    assert collision_prob_exact(0, 0) == 1
    assert collision_prob_exact(1, 1) == Fraction(1, 2)
    assert collision_prob_exact(2, 2) == Fraction(3, 8)


@given(st.integers(0, 7), st.integers(0, 7))
def test_collision_prob_matches_enumeration(s, t):
    assert collision_prob_exact(s, t) == oracles.brute_collision(s, t)


def test_collision_prob_beyond_guard_is_flagged():
    p = collision_prob_exact(2000, 2000, guard=4096)
    assert isinstance(p, Fraction)
    q = collision_prob_exact(2000, 2000, guard=100)
    assert isinstance(q, ApproxProb) and not q.exact
    assert math.isclose(float(q), float(p), rel_tol=1e-9)
    with pytest.raises(ValueError):
        collision_prob_exact(-1, 0)


def test_collision_params_invariants():
    with pytest.raises(ValueError):
        CollisionParams(0, 1, True)
    assert CollisionParams(3, 2, True).delta == 3
    assert CollisionParams(3, 2, False).delta == 5


@given(graph_and_pair())
def test_collision_params_relation_to_distance(gp):
    g, x, y = gp
    p = collision_params(g, x, y)
    nx, ny = oracles.neighbours(g, x), oracles.neighbours(g, y)
    assert (p.s, p.t) == (len(nx - ny), len(ny - nx))
    assert p.delta == nbhd_distance(g, x, y)


def test_collision_prob_pair_examples():
    twins = Graph.empty(2)
    assert collision_prob_pair(twins, 0, 1) == 1
    assert collision_prob_pair(P3, 0, 2) == 1
    assert collision_prob_pair(K2, 0, 1) == Fraction(1, 2)
    with pytest.raises(InvalidPairError):
        collision_prob_pair(P3, 1, 1)


@given(graph_and_pair(max_n=7))
def test_degree_graph_edge_prob_matches_enumeration(gp):
    g, x, y = gp
    assert degree_graph_edge_prob(g, x, y) == oracles.brute_pair_edge_prob(g, x, y)


def test_lemma31_bound_examples():
    assert lemma31_bound(0) == 20
    assert lemma31_bound(3) == 10
    assert lemma31_bound(399) == 1


def test_collision_bound_chain_small_grid():
    for s in range(40):
        for t in range(s + 1):
            for edge in (False, True):
                if edge and t == 0:
                    continue
                assert all(collision_bound_chain(s, t, edge).values()), (s, t, edge)


@given(graphs(min_n=2))
def test_pair_probability_below_lemma_bound(g):
    assert pair_collision_bound_ok(g)
    for x, y in combinations(range(g.n), 2):
        assert below_collision_bound(collision_prob_pair(g, x, y), nbhd_distance(g, x, y))


def test_central_binomial_matches_oracle():
    for s in range(300):
        assert central_binomial_ok(s) == oracles.central_binomial_float_free(s) is True


def test_expected_edges_examples():
    e = expected_degree_graph_edges(Graph.empty(4))
    assert e.exact == e.unconditional == Fraction(3, 2)
    assert e.bound_decimal == Decimal(30)
    k2 = expected_degree_graph_edges(K2)
    # the pair's own membership matters for an edge: x in U shifts y's degree
    assert k2.unconditional == Fraction(1, 8)
    assert k2.exact == Fraction(1, 4) == oracles.brute_expected_degree_graph_edges(K2)


@given(graphs(max_n=8))
def test_expected_edges_matches_enumeration(g):
    e = expected_degree_graph_edges(g)
    assert e.exact == oracles.brute_expected_degree_graph_edges(g)
    assert e.below_bound()


def test_expected_edges_monte_carlo_g12():
    g = random_graph(12, 0.5, 5)
    exact = float(expected_degree_graph_edges(g).exact)
    samples = 100_000
    total = total_sq = 0
    for t in range(samples):
        c = degree_classes(g, VertexSet(12, sample_subset(12, 77, t))).degree_graph_edges()
        total += c
        total_sq += c * c
    mean = total / samples
    sem = math.sqrt((total_sq - samples * mean * mean) / (samples - 1) / samples)
    assert abs(mean - exact) <= 3 * sem


def test_distance_mass_examples():
    for n in range(1, 6):
        assert distance_mass(Graph.complete(n), 0) == n - 1
    assert distance_mass(P3, 0) == Fraction(3, 2)
    for x in range(5):
        expected = sum(Fraction(1, oracles.brute_delta(C5, x, y) + 1) for y in range(5) if y != x)
        assert distance_mass(C5, x) == expected


@given(graphs(min_n=1, max_n=9))
def test_distance_mass_and_sum_chain(g):
    h, _ = hom(g)
    for x in range(g.n):
        assert distance_mass(g, x) <= 2 * h
    terms = distance_sum_terms(g, h)
    assert terms.holds
    pairs = [(x, y) for x, y in combinations(range(g.n), 2)]
    s1 = sum((Fraction(1, oracles.brute_delta(g, x, y) + 1) for x, y in pairs), Fraction(0))
    assert terms.inv_sum == s1
    assert terms.n_hom == g.n * h
    # the complement has the same distances and the same hom
    assert distance_sum_terms(complement(g), h).inv_sum == s1
