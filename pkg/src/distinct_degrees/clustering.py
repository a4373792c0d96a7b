"""Cluster partitions by neighbourhood distance and the degree predicates
used alongside them.

:func:`partition` is the seed-and-grow procedure: find a vertex with a large
ball of close vertices, then repeatedly absorb every remaining vertex within
``link_dist`` of the growing cluster while the absorbed batch is at least a
``growth_ratio`` fraction of the cluster.  When growth stalls the cluster is
closed and the stalled fringe is set aside in the leftover set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import InvalidSubsetError, InvalidVertexError
from .graph_core import Graph, VertexSet, _check_subset, complement, distance_table, iter_bits


class Side(str, Enum):
    GRAPH = "graph"
    COMPLEMENT = "complement"
    NEITHER = "neither"


@dataclass(frozen=True)
class PaperConstants:
    k: int
    eps: float
    beta: float
    eta: float
    J: float
    J_alt: float
    K: float
    Delta: float
    L: float


def paper_constants(k: int, eps: float) -> PaperConstants:
    """The asymptotic constants as functions of ``k`` and ``eps``.

    ``J`` is evaluated both from ``eta`` and from ``eps * beta``; the two
    printed forms must agree to ``1e-12`` relative.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")
    beta = eps / (10 * k)
    eta = eps * beta / (1e5 * k**2)
    J = 1e4 * k**12 * 2.0 ** (4 * k) / eta**4
    J_alt = 1e24 * k**20 * 2.0 ** (4 * k) / (eps * beta) ** 4
    if not math.isclose(J, J_alt, rel_tol=1e-12):
        raise AssertionError(f"J forms disagree: {J!r} vs {J_alt!r}")
    K = 2 * (1e6 * k**2 + J * math.log(1e4 * k) / math.log1p(beta / 2))
    Delta = 4 * K
    L = (Delta**2 + 1) * k
    consts = PaperConstants(k, eps, beta, eta, J, J_alt, K, Delta, L)
    for name in ("beta", "eta", "J", "K", "Delta", "L"):
        value = getattr(consts, name)
        if not (value > 0 and math.isfinite(value)):
            raise AssertionError(f"{name} is not a positive finite number: {value!r}")
    return consts


@dataclass(frozen=True)
class ClusterParams:
    seed_radius: int  # seed ball: δ(w, x) < seed_radius
    link_dist: int  # growth: δ(x, C) <= link_dist
    growth_ratio: float = 0.5  # absorb the fringe T only if |T| >= growth_ratio * |C|
    seed_frac: float = 0.0  # the seed ball must hold > seed_frac * |W| vertices
    min_cluster_frac: float = 0.0  # and the seeded cluster > min_cluster_frac * n

    def __post_init__(self):
        if self.seed_radius >= self.link_dist:
            raise ValueError("seed_radius must be smaller than link_dist")
        if not 0 < self.growth_ratio < 1:
            raise ValueError("growth_ratio must lie in (0, 1)")
        if not (0 <= self.seed_frac < 1 and 0 <= self.min_cluster_frac < 1):
            raise ValueError("fractions must lie in [0, 1)")


@dataclass(frozen=True)
class ClusterResult:
    clusters: tuple[VertexSet, ...]
    leftover: VertexSet
    max_intra: int | None  # largest δ inside any cluster
    min_inter: int | None  # smallest δ between different clusters

    def __post_init__(self):
        n = self.leftover.parent_n
        seen = self.leftover.mask
        for c in self.clusters:
            if c.mask & seen:
                raise AssertionError("clusters overlap each other or the leftover set")
            seen |= c.mask
        if seen != (1 << n) - 1:
            raise AssertionError("clusters and leftover do not cover the vertex set")


def _certify(table: list[list[int]], clusters: list[int]) -> tuple[int | None, int | None]:
    max_intra = None
    min_inter = None
    members = [list(iter_bits(c)) for c in clusters]
    for i, a in enumerate(members):
        for j, x in enumerate(a):
            for y in a[j + 1:]:
                if max_intra is None or table[x][y] > max_intra:
                    max_intra = table[x][y]
        for b in members[i + 1:]:
            for x in a:
                for y in b:
                    if min_inter is None or table[x][y] < min_inter:
                        min_inter = table[x][y]
    return max_intra, min_inter


def partition(g: Graph, p: ClusterParams) -> ClusterResult:
    table = distance_table(g)
    n = g.n
    remaining = (1 << n) - 1
    leftover = 0
    clusters: list[int] = []
    while remaining:
        size_w = remaining.bit_count()
        best_w, best_ball = -1, 0
        for w in iter_bits(remaining):
            row = table[w]
            ball = 0
            for x in iter_bits(remaining ^ (1 << w)):
                if row[x] < p.seed_radius:
                    ball |= 1 << x
            if ball.bit_count() > best_ball.bit_count():
                best_w, best_ball = w, ball
        if (
            best_w < 0
            or best_ball.bit_count() <= p.seed_frac * size_w
            or best_ball.bit_count() + 1 <= p.min_cluster_frac * n
        ):
            break
        cluster = best_ball | (1 << best_w)
        while True:
            fringe = 0
            for x in iter_bits(remaining & ~cluster):
                row = table[x]
                if any(row[y] <= p.link_dist for y in iter_bits(cluster)):
                    fringe |= 1 << x
            if fringe and fringe.bit_count() >= p.growth_ratio * cluster.bit_count():
                cluster |= fringe
                continue
            break
        clusters.append(cluster)
        leftover |= fringe
        remaining &= ~(cluster | fringe)
    leftover |= remaining
    max_intra, min_inter = _certify(table, clusters)
    return ClusterResult(
        tuple(VertexSet(n, c) for c in clusters), VertexSet(n, leftover), max_intra, min_inter
    )


@dataclass
class PartitionReport:
    coverage: bool
    sizes: bool
    intra: bool
    inter: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.coverage and self.sizes and self.intra and self.inter


def validate_partition(
    g: Graph, r: ClusterResult, K: float, J: float, min_size: int, max_leftover: int
) -> PartitionReport:
    """Check the four partition properties.

    coverage: ``|leftover| <= max_leftover``; sizes: every cluster has at
    least ``min_size`` vertices; intra: ``δ < K`` inside each cluster;
    inter: ``δ > J`` across clusters.  Failures carry a witness.
    """
    table = distance_table(g)
    witnesses: dict = {}
    coverage = len(r.leftover) <= max_leftover
    if not coverage:
        witnesses["coverage"] = len(r.leftover)
    small = [i for i, c in enumerate(r.clusters) if len(c) < min_size]
    if small:
        witnesses["sizes"] = small[0]
    members = [c.members() for c in r.clusters]
    for a in members:
        if "intra" in witnesses:
            break
        for i, x in enumerate(a):
            bad = next((y for y in a[i + 1:] if table[x][y] >= K), None)
            if bad is not None:
                witnesses["intra"] = (x, bad, table[x][bad])
                break
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            for x in a:
                bad = next((y for y in b if table[x][y] <= J), None)
                if bad is not None and "inter" not in witnesses:
                    witnesses["inter"] = (x, bad, table[x][bad])
    return PartitionReport(
        coverage, not small, "intra" not in witnesses, "inter" not in witnesses, witnesses
    )


def _closed_nbhd(g: Graph, s: int, v: int, in_complement: bool) -> int:
    nb = g.adj[v] & s
    if in_complement:
        nb = s & ~nb & ~(1 << v)
    return nb | (1 << v)


def s_independent(g: Graph, s: VertexSet, x: int, y: int, in_complement: bool = False) -> bool:
    """Closed neighbourhoods of ``x`` and ``y`` inside ``s`` are disjoint
    (neighbourhoods taken in the complement when ``in_complement``)."""
    _check_subset(g, s)
    if x == y:
        raise InvalidVertexError("S-independence needs two distinct vertices")
    if x not in s or y not in s:
        raise InvalidSubsetError(f"both {x} and {y} must belong to S")
    return not _closed_nbhd(g, s.mask, x, in_complement) & _closed_nbhd(g, s.mask, y, in_complement)


def compute_r(a_size: int, n: int, k: int, eps: float, eta: float) -> int:
    """The unique ``r >= 0`` with ``r*n/(k-1+eps) < a_size - eta*n <= (r+1)*n/(k-1+eps)``.

    Evaluated exactly on the binary values of ``eps`` and ``eta``.
    """
    excess = Fraction(a_size) - Fraction(eta) * n
    if excess <= 0:
        raise ValueError(f"|A| - eta*n must be positive (got {float(excess)})")
    if a_size > n:
        raise ValueError("cluster larger than the graph")
    unit = Fraction(n) / (k - 1 + Fraction(eps))
    r = math.ceil(excess / unit) - 1
    if not (r * unit < excess <= (r + 1) * unit) or r < 0:
        raise AssertionError("interval arithmetic for r is inconsistent")
    return r


def independent_core(g: Graph, a: VertexSet, k: int, r: int) -> tuple[Side, VertexSet]:
    """A set of pairwise ``A``-independent vertices of moderate degree inside ``A``.

    The orientation is whichever of ``G[A]`` and its complement has the
    smaller maximum degree (the graph on ties).  In that orientation, drop
    every vertex of degree ``>= k-1`` together with every vertex dependent on
    one, keep those with ``r <= deg <= k-2``, then select greedily in
    ascending index order.
    """
    _check_subset(g, a)
    if r > k - 2:
        raise ValueError(f"r must be at most k-2 (got r={r}, k={k})")
    amask = a.mask
    verts = a.members()
    deg_g = {v: (g.adj[v] & amask).bit_count() for v in verts}
    deg_c = {v: len(verts) - 1 - deg_g[v] for v in verts}
    max_g = max(deg_g.values(), default=0)
    max_c = max(deg_c.values(), default=0)
    side = Side.GRAPH if max_g <= max_c else Side.COMPLEMENT
    in_comp = side is Side.COMPLEMENT
    deg = deg_c if in_comp else deg_g
    closed = {v: _closed_nbhd(g, amask, v, in_comp) for v in verts}
    high = [v for v in verts if deg[v] >= k - 1]
    core = 0
    used = 0
    for v in verts:
        if not r <= deg[v] <= k - 2:
            continue
        # v depends on a high vertex y iff their closed neighbourhoods meet
        if any(closed[v] & closed[y] for y in high):
            continue
        if closed[v] & used:
            continue
        core |= 1 << v
        used |= closed[v]
    return side, VertexSet(g.n, core)


def bounded_degree_side(g: Graph, K: int) -> Side:
    """A side (graph or complement) whose maximum degree is at most ``4K``;
    the smaller one when both qualify, the graph on ties."""
    max_g = g.max_degree()
    max_c = complement(g).max_degree()
    ok_g, ok_c = max_g <= 4 * K, max_c <= 4 * K
    if ok_g and ok_c:
        return Side.GRAPH if max_g <= max_c else Side.COMPLEMENT
    if ok_g:
        return Side.GRAPH
    if ok_c:
        return Side.COMPLEMENT
    return Side.NEITHER


def high_degree_count(g: Graph, k: int) -> int:
    """Number of vertices of degree at least ``k - 1``."""
    return sum(1 for d in g.degrees() if d >= k - 1)


def max_pair_distance(g: Graph) -> int:
    table = distance_table(g)
    return max((table[x][y] for x in range(g.n) for y in range(x + 1, g.n)), default=0)
