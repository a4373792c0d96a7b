from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from distinct_degrees import (
    Graph,
    VertexSet,
    complement,
    degree_in,
    disjoint_cliques,
    induced,
    nbhd_distance,
    random_graph,
)
from distinct_degrees.errors import InvalidPairError, InvalidSubsetError, InvalidVertexError
from distinct_degrees.graph_core import distance_histogram, distance_table

import oracles
from strategies import graph_and_pair, graph_and_subset, graphs

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_graph_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))


def test_vertex_set_bounds():
    with pytest.raises(InvalidSubsetError):
        VertexSet(3, 0b1000)
    with pytest.raises(InvalidSubsetError):
        VertexSet.of(3, [3])
    s = VertexSet.of(5, [4, 1])
    assert s.members() == [1, 4] and len(s) == 2 and 4 in s and 0 not in s


def test_complement_examples():
    assert complement(Graph.complete(3)) == Graph.empty(3)
    assert complement(Graph.empty(0)) == Graph.empty(0)
    assert complement(P3).edges() == [(0, 2)]


def test_induced_examples():
    k4 = Graph.complete(4)
    sub, _ = induced(k4, VertexSet.of(4, [1, 3]))
    assert sub == Graph.complete(2)
    sub, mapping = induced(C5, VertexSet.full(5))
    assert sub == C5 and mapping == {v: v for v in range(5)}
    sub, _ = induced(C5, VertexSet.of(5, [0, 1, 2, 3]))
    assert sub == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_induced_rejects_foreign_subset():
    with pytest.raises(InvalidSubsetError):
        induced(P3, VertexSet.full(4))


def test_degree_in_examples():
    assert degree_in(STAR, 0, VertexSet.of(4, [1, 2, 3])) == 3
    assert degree_in(C5, 2, VertexSet.empty(5)) == 0
    assert degree_in(Graph.complete(4), 0, VertexSet.of(4, [0, 1, 2])) == 2
    with pytest.raises(InvalidVertexError):
        degree_in(P3, 3, VertexSet.full(3))


def test_nbhd_distance_examples():
    assert nbhd_distance(Graph.complete(3), 0, 1) == 0
    assert nbhd_distance(P3, 0, 2) == 0
    assert nbhd_distance(P3, 0, 1) == 1
    assert nbhd_distance(disjoint_cliques(2, 3), 0, 3) == 4
    with pytest.raises(InvalidPairError):
        nbhd_distance(P3, 1, 1)
    with pytest.raises(InvalidVertexError):
        nbhd_distance(P3, 0, 5)


@given(graph_and_pair())
def test_nbhd_distance_matches_set_oracle(gp):
    g, x, y = gp
    assert nbhd_distance(g, x, y) == oracles.brute_delta(g, x, y)


@given(graphs(min_n=2))
def test_distance_range_symmetry_and_complement(g):
    cg = complement(g)
    for x, y in combinations(range(g.n), 2):
        d = nbhd_distance(g, x, y)
        assert 0 <= d <= g.n - 2
        assert d == nbhd_distance(g, y, x) == nbhd_distance(cg, x, y)


@given(graphs(min_n=3))
def test_triangle_inequality(g):
    t = distance_table(g)
    for x, y, z in combinations(range(g.n), 3):
        assert t[x][y] + t[y][z] >= t[x][z]
        assert t[x][y] + t[x][z] >= t[y][z]
        assert t[x][z] + t[y][z] >= t[x][y]


def test_triangle_inequality_random_g20():
    for seed in range(100):
        g = random_graph(20, 0.5, seed)
        t = distance_table(g)
        for x, y, z in combinations(range(20), 3):
            assert t[x][y] + t[y][z] >= t[x][z]
            assert t[x][y] + t[x][z] >= t[y][z]
            assert t[x][z] + t[y][z] >= t[x][y]


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graph_and_subset())
def test_induced_degrees_match_degree_in(gs):
    g, s = gs
    sub, mapping = induced(g, s)
    assert sub.n == len(s)
    for old, new in mapping.items():
        assert sub.degree(new) == degree_in(g, old, s)
    es = oracles.edge_set(g)
    inv = {new: old for old, new in mapping.items()}
    assert {frozenset((inv[u], inv[v])) for u, v in sub.edges()} == {
        e for e in es if e <= set(s.members())
    }


@given(graphs(), st.data())
def test_distance_histogram_counts_pairs(g, data):
    mask = data.draw(st.integers(0, (1 << g.n) - 1)) if g.n else 0
    w = VertexSet(g.n, mask)
    hist = distance_histogram(g, w)
    k = len(w)
    assert sum(hist.values()) == k * (k - 1) // 2
    expected = {}
    for x, y in combinations(w.members(), 2):
        d = oracles.brute_delta(g, x, y)
        expected[d] = expected.get(d, 0) + 1
    assert dict(hist) == expected


def test_degenerate_sizes():
    for n in (0, 1):
        g = Graph.empty(n)
        assert g.edges() == [] and g.degrees() == [0] * n and g.max_degree() == 0
        assert distance_histogram(g) == {}
