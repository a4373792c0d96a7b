import math
import time

import pytest

from distinct_degrees import Graph, disjoint_cliques, random_graph
from distinct_degrees.errors import CapabilityExceeded
from distinct_degrees.harness import (
    concentration_checks,
    degree_histogram_experiment,
    verify_theorem1,
    verify_theorem2_construction,
)
from distinct_degrees.sweep import check_graph, exhaustive_small_sweep, graph_from_code


def _status(report):
    return {c.claim: c.status for c in report.checks}


def test_verify_theorem1_small_graphs():
    for code in (0, 5, 63):
        g = graph_from_code(4, code)
        rep = verify_theorem1(g, trials=10, seed=0)
        assert rep.passed and rep.quantities["f_method"] == "exact"


def test_verify_theorem1_disjoint_cliques():
    rep = verify_theorem1(disjoint_cliques(4, 3), trials=10, seed=0)
    assert rep.passed
    assert rep.quantities["f_lower"] == 3
    assert math.isclose(rep.quantities["bound"], math.sqrt(3) / 250)
    for c in rep.checks:
        assert c.status == "pass" and c.lhs is not None and c.rhs is not None


def test_verify_theorem1_randomized_path_and_target():
    g = random_graph(64, 0.5, 1)
    rep = verify_theorem1(g, trials=30, seed=1, witness_target=5)
    st = _status(rep)
    assert rep.quantities["f_method"] == "randomized" and rep.quantities["hom_exact"]
    assert st["f_lower_bound"] == st["f_lower_bound.ceil_strict"] == st["witness.target"] == "pass"
    big = verify_theorem1(g, trials=30, seed=1, witness_target=10**6)
    assert not big.passed and [c.claim for c in big.failures()] == ["witness.target"]


def test_verify_theorem1_skips_when_hom_is_estimated():
    rep = verify_theorem1(random_graph(40, 0.5, 2), trials=5, seed=2, hom_guard=10)
    st = _status(rep)
    assert st["distance_sum_chain"] == st["distance_mass"] == "skip"
    assert rep.quantities["hom_exact"] is False


def test_verify_theorem2_examples():
    for k, m, f, h in ((2, 5, 1, 5), (4, 4, 3, 4), (3, 2, 2, 2)):
        rep = verify_theorem2_construction(k, m)
        assert rep.passed
        assert (rep.quantities["f"], rep.quantities["hom"]) == (f, h)
    with pytest.raises(CapabilityExceeded):
        verify_theorem2_construction(5, 7)


def test_verify_theorem2_reports_small_m_mismatch():
    # two disjoint triangles can show only two degree values, not three
    rep = verify_theorem2_construction(4, 2)
    assert not rep.passed
    assert [(c.claim, c.lhs, c.rhs) for c in rep.failures()] == [("f", 2, 3)]


def test_histogram_examples():
    rep = degree_histogram_experiment(disjoint_cliques(100, 3), 3, 2000, seed=4)
    assert rep.predicted == [37.5, 75.0, 37.5]
    assert rep.passed
    empty = degree_histogram_experiment(Graph.empty(50), 1, 500, seed=4)
    assert empty.predicted == [25.0] and empty.passed


def test_histogram_counts_sum_to_mean_subset_size():
    rep = degree_histogram_experiment(disjoint_cliques(30, 4), 4, 300, seed=5)
    assert math.isclose(sum(rep.observed_mean), rep.mean_subset_size)
    assert [r["degree"] for r in rep.rows()] == [0, 1, 2, 3]


def test_histogram_single_trial_is_insufficient():
    rep = degree_histogram_experiment(disjoint_cliques(10, 3), 3, 1, seed=0)
    assert not rep.sufficient and not rep.passed


def test_concentration_single_trial():
    rep = concentration_checks(disjoint_cliques(8, 3), 1, seed=0)
    st = _status(rep)
    assert rep.quantities["sufficient"] is False
    assert st["mean.degree_graph_edges"] == st["markov.degree_graph_edges"] == "skip"
    assert st["expected_edges_bound"] == "pass"


def test_concentration_small_graph_skips_subset_size():
    rep = concentration_checks(disjoint_cliques(10, 3), 400, seed=1)
    st = _status(rep)
    assert st["hoeffding.subset_size"] == "skip"
    assert rep.passed


def test_sweep_trivial_and_small():
    assert exhaustive_small_sweep(0).passed
    start = time.perf_counter()
    rep = exhaustive_small_sweep(4)
    assert time.perf_counter() - start < 1.0
    assert rep.passed and rep.quantities["graphs"] == {0: 1, 1: 1, 2: 2, 3: 8, 4: 64}
    with pytest.raises(ValueError):
        exhaustive_small_sweep(7)


def test_check_graph_reports_values():
    out, f, h = check_graph(disjoint_cliques(2, 3))
    assert all(v is None for v in out.values())
    assert (f, h) == (2, 3)


def test_reports_are_reproducible():
    g = random_graph(30, 0.5, 9)
    a = concentration_checks(g, 200, seed=3).to_dict()
    b = concentration_checks(g, 200, seed=3).to_dict()
    assert a == b
    assert verify_theorem1(g, 20, 3).to_dict() == verify_theorem1(g, 20, 3).to_dict()
