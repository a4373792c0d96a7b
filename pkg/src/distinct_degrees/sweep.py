"""Exhaustive invariant sweep over every labelled graph on at most six vertices."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import numeric
from .collision import below_collision_bound, collision_prob_exact, distance_mass, distance_sum_terms
from .degree_diversity import dhat_threshold, f_exact, theorem1_bound
from .graph_core import Graph, complement, distance_table
from .harness import VerificationReport
from .homogeneous import caro_wei_sum, hom, max_independent_set

MAX_SWEEP_N = 6

CLAIMS = (
    "triangle",
    "distance_range",
    "distance_complement",
    "hom_complement",
    "f_complement",
    "caro_wei",
    "caro_wei_weak",
    "distance_mass",
    "distance_sum_chain",
    "collision_bound",
    "bounded_degree_side",
    "high_degree_count",
    "dhat_threshold",
    "f_lower_bound",
)


@lru_cache(maxsize=None)
def _collision_bound_ok(s: int, t: int, edge: bool) -> bool:
    delta = s + t - 2 if edge else s + t
    return below_collision_bound(Fraction(collision_prob_exact(s, t)), delta)


@lru_cache(maxsize=None)
def _distance_sum_ok(hist_key: tuple, n: int, hom_value: int) -> bool:
    terms = distance_sum_terms(Graph.empty(n), hom_value, Counter(dict(hist_key)))
    return terms.holds


_DIGIT = 8


@lru_cache(maxsize=None)
def _dhat_ok(code: int, size: int, k: int) -> bool:
    hist = {}
    d = 0
    while code:
        count = code & ((1 << _DIGIT) - 1)
        if count:
            hist[d] = count
        code >>= _DIGIT
        d += 1
    lhs = numeric.CTX.multiply(numeric.to_decimal(5), numeric.inv_sqrt_sum(hist))
    return numeric.exceeds(lhs, dhat_threshold(size, k))


def _dhat_all(n: int, table: list[list[int]], k: int) -> int | None:
    """First non-empty ``W`` (as a mask) violating the inequality, if any.

    Pair-distance histograms of all subsets are built incrementally, packed
    as base-256 digit strings.
    """
    size = 1 << n
    # contrib[v][M]: packed histogram of distances from v to the members of M
    contrib = []
    for v in range(n):
        row = [0] * size
        for m in range(1, size):
            low = m & -m
            u = low.bit_length() - 1
            row[m] = row[m ^ low] + (0 if u == v else 1 << (_DIGIT * table[u][v]))
        contrib.append(row)
    code = [0] * size
    for w in range(1, size):
        low = w & -w
        v = low.bit_length() - 1
        rest = w ^ low
        code[w] = code[rest] + contrib[v][rest]
        if not _dhat_ok(code[w], w.bit_count(), k):
            return w
    return None


def check_graph(g: Graph) -> tuple[dict[str, str | None], int, int]:
    """Run every small-graph invariant on ``g``.

    Returns ``(failures, f, hom)`` where ``failures`` maps each claim to a
    failure detail, or None when it held.
    """
    n = g.n
    out: dict[str, str | None] = dict.fromkeys(CLAIMS)
    table = distance_table(g)
    cg = complement(g)
    ctable = distance_table(cg)

    for x, y, z in combinations(range(n), 3):
        a, b, c = table[x][y], table[y][z], table[x][z]
        if a + b < c or a + c < b or b + c < a:
            out["triangle"] = f"({x},{y},{z})"
            break
    hist: Counter = Counter()
    for x, y in combinations(range(n), 2):
        d = table[x][y]
        hist[d] += 1
        if not 0 <= d <= n - 2:
            out["distance_range"] = f"({x},{y}) δ={d}"
        if ctable[x][y] != d:
            out["distance_complement"] = f"({x},{y})"

    h, _ = hom(g)
    if hom(cg)[0] != h:
        out["hom_complement"] = "hom differs"
    f = f_exact(g).distinct_count
    if f_exact(cg).distinct_count != f:
        out["f_complement"] = "f differs"

    alpha = max_independent_set(g).size
    cw = caro_wei_sum(g)
    if alpha < math.ceil(cw.total):
        out["caro_wei"] = f"alpha={alpha} < ceil({cw.total})"
    if cw.total < cw.weak:
        out["caro_wei_weak"] = f"{cw.total} < {cw.weak}"

    for x in range(n):
        if distance_mass(g, x) > 2 * h:
            out["distance_mass"] = f"vertex {x}"
            break
    if not _distance_sum_ok(tuple(sorted(hist.items())), n, h):
        out["distance_sum_chain"] = "chain broken"

    for x, y in combinations(range(n), 2):
        ax, ay = g.adj[x], g.adj[y]
        s, t = (ax & ~ay).bit_count(), (ay & ~ax).bit_count()
        if not _collision_bound_ok(max(s, t), min(s, t), bool(ax >> y & 1)):
            out["collision_bound"] = f"({x},{y})"
            break

    k_star = max(hist, default=0)
    side_max = min(g.max_degree(), cg.max_degree())
    if side_max > 4 * k_star:
        out["bounded_degree_side"] = f"min max-degree {side_max} > 4*{k_star}"

    k = f + 1
    big_delta = g.max_degree()
    high = sum(1 for d in g.degrees() if d >= k - 1)
    if high > (big_delta**2 + 1) * k:
        out["high_degree_count"] = f"{high} > ({big_delta}^2+1)*{k}"

    bad_w = _dhat_all(n, table, k)
    if bad_w is not None:
        out["dhat_threshold"] = f"W={bad_w:#x}, k={k}"

    if n >= 1 and (f < 1 or f < theorem1_bound(n, h)):
        out["f_lower_bound"] = f"f={f}"
    return out, f, h


def graph_from_code(n: int, code: int) -> Graph:
    """Labelled graph whose edge set is the bit pattern ``code`` over the
    pairs of ``range(n)`` in lexicographic order."""
    rows = [0] * n
    for i, (u, v) in enumerate(combinations(range(n), 2)):
        if code >> i & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def exhaustive_small_sweep(n_max: int) -> VerificationReport:
    if not 0 <= n_max <= MAX_SWEEP_N:
        raise ValueError(f"n_max must lie in [0, {MAX_SWEEP_N}]")
    report = VerificationReport(f"all labelled graphs with n <= {n_max}")
    graphs = {}
    failures = dict.fromkeys(CLAIMS, 0)
    first: dict[str, str] = {}
    min_f_by_hom: dict[str, int] = {}
    for n in range(n_max + 1):
        count = 1 << (n * (n - 1) // 2)
        graphs[n] = count
        for code in range(count):
            g = graph_from_code(n, code)
            out, f, h = check_graph(g)
            for claim, detail in out.items():
                if detail is not None:
                    failures[claim] += 1
                    first.setdefault(claim, f"n={n} code={code}: {detail}")
            if n:
                key = f"n={n},hom={h}"
                min_f_by_hom[key] = min(f, min_f_by_hom.get(key, f))
    report.quantities["graphs"] = graphs
    report.quantities["min_f_by_hom"] = dict(sorted(min_f_by_hom.items()))
    for claim in CLAIMS:
        report.check(claim, failures[claim] == 0, failures[claim], "==", 0, note=first.get(claim))
    return report
