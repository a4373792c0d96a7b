"""Verification campaigns and Monte-Carlo experiments.

Every report records both sides of each checked relation, the seeds and the
trial counts, so a JSON dump is enough to re-derive each verdict offline.
Statistical thresholds: 5 standard errors for histogram rows, 3 for mean and
frequency comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np

from .collision import distance_mass, distance_sum_terms, expected_degree_graph_edges
from .constructions import disjoint_cliques
from .degree_diversity import (
    DEFAULT_ENUM_GUARD,
    f_exact,
    randomized_witness,
    sample_subset,
    theorem1_bound,
)
from .errors import CapabilityExceeded
from .graph_core import Graph, iter_bits
from .homogeneous import DEFAULT_GUARD, hom_estimate

HISTOGRAM_SIGMAS = 5.0
MEAN_SIGMAS = 3.0


@dataclass
class Check:
    claim: str
    status: str  # "pass", "fail" or "skip"
    lhs: Any = None
    relation: str = ""
    rhs: Any = None
    tolerance: Any = None
    note: str | None = None


@dataclass
class VerificationReport:
    subject: str
    quantities: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    seeds: dict = field(default_factory=dict)
    trials: int | None = None

    def check(self, claim, ok, lhs=None, relation="", rhs=None, tolerance=None, note=None):
        self.checks.append(Check(claim, "pass" if ok else "fail", lhs, relation, rhs, tolerance, note))

    def skip(self, claim, note):
        self.checks.append(Check(claim, "skip", note=note))

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def to_dict(self) -> dict:
        return jsonable(
            {
                "subject": self.subject,
                "passed": self.passed,
                "quantities": self.quantities,
                "checks": [c.__dict__ for c in self.checks],
                "seeds": self.seeds,
                "trials": self.trials,
            }
        )


def jsonable(obj):
    """Exact values become strings; everything else maps to plain JSON types."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Decimal):
        return format(obj, "f") if abs(obj) < 1e15 else str(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, np.integer):
        return int(obj)
    return str(obj)


def _graph_quantities(g: Graph) -> dict:
    return {"n": g.n, "e": g.num_edges()}


def verify_theorem1(
    g: Graph,
    trials: int,
    seed: int,
    *,
    subject: str = "graph",
    hom_guard: int = DEFAULT_GUARD,
    f_guard: int = DEFAULT_ENUM_GUARD,
    hom_value: int | None = None,
    witness_target: int | None = None,
) -> VerificationReport:
    """Distinct-degree lower bound against ``(1/250) sqrt(n/hom)``, plus the
    pair-distance inequalities that feed it.

    ``f`` is exact within ``f_guard`` and a randomized witness otherwise.
    With ``witness_target`` set, the witness must also strictly exceed the
    rounded-up bound and reach the target.
    """
    report = VerificationReport(subject, _graph_quantities(g), seeds={"witness": seed}, trials=trials)
    q = report.quantities
    if hom_value is None:
        est = hom_estimate(g, seed, hom_guard)
        hom_value, hom_is_exact = est.value, est.exact
        q["hom_witness"] = hex(est.witness.members.mask)
    else:
        hom_is_exact = True
    q["hom"] = hom_value
    q["hom_exact"] = hom_is_exact

    if g.n <= f_guard:
        w = f_exact(g, guard=f_guard)
        q["f_method"] = "exact"
    else:
        w = randomized_witness(g, trials, seed)
        q["f_method"] = "randomized"
    q["f_lower"] = w.distinct_count
    q["witness_subset"] = hex(w.subset.mask)
    report.check("witness.verifies", w.verify(g), w.distinct_count, "==", "recount")

    if g.n == 0:
        report.skip("f_lower_bound", "empty graph")
        return report
    bound = theorem1_bound(g.n, hom_value)
    q["bound"] = bound
    report.check("f_lower_bound", w.distinct_count >= bound, w.distinct_count, ">=", bound)
    if witness_target is not None:
        ceil_bound = math.ceil(bound)
        report.check("f_lower_bound.ceil_strict", w.distinct_count > ceil_bound, w.distinct_count, ">", ceil_bound)
        report.check("witness.target", w.distinct_count >= witness_target, w.distinct_count, ">=", witness_target)

    if not hom_is_exact:
        report.skip("distance_sum_chain", "hom is a heuristic estimate")
        report.skip("distance_mass", "hom is a heuristic estimate")
        return report
    terms = distance_sum_terms(g, hom_value)
    report.check("distance_sum_chain.left", terms.n_hom >= terms.inv_sum, terms.n_hom, ">=", terms.inv_sum)
    report.check(
        "distance_sum_chain.right",
        terms.holds,
        terms.inv_sum,
        ">=",
        terms.cs_lower,
        tolerance="1e-40",
    )
    worst_x, worst = 0, Fraction(0)
    for x in range(g.n):
        m = distance_mass(g, x)
        if m > worst:
            worst_x, worst = x, m
    q["distance_mass_argmax"] = worst_x
    report.check("distance_mass", worst <= 2 * hom_value, worst, "<=", 2 * hom_value)
    return report


def verify_construction(g: Graph, subject: str, expected_f: int, expected_hom: int,
                        guard: int = DEFAULT_ENUM_GUARD) -> VerificationReport:
    if g.n > guard:
        raise CapabilityExceeded(f"construction check limited to n <= {guard} (got n={g.n})")
    report = VerificationReport(subject, _graph_quantities(g))
    w = f_exact(g, guard=guard)
    est = hom_estimate(g, seed=0, guard=max(guard, DEFAULT_GUARD))
    report.quantities.update(f=w.distinct_count, hom=est.value, witness_subset=hex(w.subset.mask))
    report.check("f", w.distinct_count == expected_f, w.distinct_count, "==", expected_f)
    report.check("hom", est.value == expected_hom, est.value, "==", expected_hom)
    return report


def verify_theorem2_construction(k: int, m: int, guard: int = DEFAULT_ENUM_GUARD) -> VerificationReport:
    """``m`` disjoint cliques of size ``k-1``: ``f = k-1`` and ``hom = max(m, k-1)``."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    if (k - 1) * m > guard:
        raise CapabilityExceeded(f"(k-1)*m = {(k - 1) * m} exceeds the brute-force guard {guard}")
    g = disjoint_cliques(m, k - 1)
    report = verify_construction(g, f"disjoint_cliques(m={m}, k={k - 1})", k - 1, max(m, k - 1), guard)
    report.quantities.update(k=k, m=m)
    return report


@dataclass
class HistogramReport:
    subject: str
    degrees: list[int]
    predicted: list[float]
    observed_mean: list[float]
    observed_std: list[float]
    z: list[float]
    trials: int
    seed: int
    mean_subset_size: float
    threshold: float = HISTOGRAM_SIGMAS

    @property
    def sufficient(self) -> bool:
        return self.trials >= 2

    @property
    def passed(self) -> bool:
        return self.sufficient and all(abs(z) <= self.threshold for z in self.z)

    def rows(self) -> list[dict]:
        return [
            {
                "degree": d,
                "predicted": p,
                "observed_mean": m,
                "observed_std": s,
                "z": z,
            }
            for d, p, m, s, z in zip(self.degrees, self.predicted, self.observed_mean, self.observed_std, self.z)
        ]

    def to_dict(self) -> dict:
        return jsonable(
            {
                "subject": self.subject,
                "passed": self.passed,
                "sufficient": self.sufficient,
                "trials": self.trials,
                "seed": self.seed,
                "threshold": self.threshold,
                "mean_subset_size": self.mean_subset_size,
                "rows": self.rows(),
            }
        )


def _degree_counts(g: Graph, mask: int, width: int) -> np.ndarray:
    counts = np.zeros(width, dtype=np.int64)
    adj = g.adj
    for v in iter_bits(mask):
        counts[(adj[v] & mask).bit_count()] += 1
    return counts


def _z(mean: float, std: float, predicted: float, trials: int) -> float:
    if trials < 2:
        return math.nan
    err = std / math.sqrt(trials)
    if err == 0:
        return 0.0 if mean == predicted else math.copysign(math.inf, mean - predicted)
    return (mean - predicted) / err


def degree_histogram_experiment(g: Graph, k: int, trials: int, seed: int,
                                subject: str | None = None) -> HistogramReport:
    """Mean number of degree-``i`` vertices in ``G[U]`` against ``n/2^k C(k-1, i)``.

    The prediction is exact in expectation for disjoint cliques of size
    ``k``: a vertex lands in ``U`` with degree ``i`` with probability
    ``C(k-1, i) / 2^k``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    width = max(g.max_degree(), k - 1) + 1
    total = np.zeros(width)
    total_sq = np.zeros(width)
    size_sum = 0
    for t in range(trials):
        mask = sample_subset(g.n, seed, t)
        c = _degree_counts(g, mask, width)
        total += c
        total_sq += c * c
        size_sum += mask.bit_count()
    mean = total / trials
    if trials > 1:
        var = np.maximum(total_sq - trials * mean * mean, 0) / (trials - 1)
    else:
        var = np.full(width, math.nan)
    std = np.sqrt(var)
    predicted = [g.n / 2**k * math.comb(k - 1, i) if i <= k - 1 else 0.0 for i in range(width)]
    z = [_z(float(mean[i]), float(std[i]), predicted[i], trials) for i in range(width)]
    return HistogramReport(
        subject or f"graph(n={g.n})",
        list(range(width)),
        predicted,
        [float(x) for x in mean],
        [float(x) for x in std],
        z,
        trials,
        seed,
        size_sum / trials,
    )


def concentration_checks(
    g: Graph,
    trials: int,
    seed: int,
    *,
    subject: str = "graph",
    hom_value: int | None = None,
    hom_guard: int = DEFAULT_GUARD,
) -> VerificationReport:
    """Frequencies of ``|U| < n/3`` and ``e(D) > 12 sqrt(n^3 hom)`` over
    1/2-random subsets, and the sample mean of ``e(D)`` against its exact
    expectation.

    A frequency passes when it is below ``1/3`` by at least three standard
    errors of a Bernoulli(1/3) mean.  The subset-size check needs ``n >= 250``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    report = VerificationReport(subject, _graph_quantities(g), seeds={"subsets": seed}, trials=trials)
    q = report.quantities
    if hom_value is None:
        est = hom_estimate(g, seed, hom_guard)
        hom_value = est.value
        q["hom_exact"] = est.exact
    else:
        q["hom_exact"] = True
    q["hom"] = hom_value
    n = g.n
    markov_cut = 12 * math.sqrt(n**3 * hom_value)
    sizes = np.empty(trials, dtype=np.int64)
    edges = np.empty(trials, dtype=np.int64)
    width = g.max_degree() + 1
    for t in range(trials):
        mask = sample_subset(n, seed, t)
        c = _degree_counts(g, mask, width)
        sizes[t] = mask.bit_count()
        edges[t] = int((c * (c - 1) // 2).sum())

    expectation = expected_degree_graph_edges(g)
    q.update(
        expected_edges_exact=expectation.exact,
        expected_edges_unconditional=expectation.unconditional,
        expected_edges_bound=expectation.bound,
        markov_cut=markov_cut,
        mean_subset_size=float(sizes.mean()),
        mean_edges=float(edges.mean()),
        sufficient=trials >= 2,
    )
    report.check("expected_edges_bound", expectation.below_bound(), expectation.exact, "<", expectation.bound_decimal)
    four_root = 4 * math.sqrt(n**3 * hom_value)
    report.check("expected_edges_bound.hom", float(expectation.exact) < four_root, expectation.exact, "<", four_root)

    if trials < 2:
        note = "statistically insufficient: fewer than two trials"
        report.skip("hoeffding.subset_size", note)
        report.skip("markov.degree_graph_edges", note)
        report.skip("mean.degree_graph_edges", note)
        return report

    margin = MEAN_SIGMAS * math.sqrt((1 / 3) * (2 / 3) / trials)
    ceiling = 1 / 3 - margin
    small = float((3 * sizes < n).mean())
    if n >= 250:
        report.check("hoeffding.subset_size", small < ceiling, small, "<", ceiling, tolerance=f"{MEAN_SIGMAS} sigma")
    else:
        report.skip("hoeffding.subset_size", "needs n >= 250")
    big = float((edges > markov_cut).mean())
    report.check("markov.degree_graph_edges", big < ceiling, big, "<", ceiling, tolerance=f"{MEAN_SIGMAS} sigma")

    mean = float(edges.mean())
    sem = float(edges.std(ddof=1)) / math.sqrt(trials)
    gap = abs(mean - float(expectation.exact))
    q["edges_sem"] = sem
    report.check("mean.degree_graph_edges", gap <= MEAN_SIGMAS * sem, gap, "<=", MEAN_SIGMAS * sem,
                 tolerance=f"{MEAN_SIGMAS} sigma")
    return report
