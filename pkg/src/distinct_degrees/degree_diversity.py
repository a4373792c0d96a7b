"""Distinct degrees in induced subgraphs: exact ``f(G)``, randomized
witnesses, degree classes and the pair-distance functional ``dhat``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import numeric
from .errors import CapabilityExceeded
from .graph_core import Graph, VertexSet, _check_subset, distance_histogram, iter_bits
from .rng import half_subset, trial_rng

DEFAULT_ENUM_GUARD = 24
# Up to this size the enumeration runs in plain Python; above it, vectorised.
_SCALAR_MAX_N = 12
_CHUNK = 1 << 20


@dataclass(frozen=True)
class DegreeClasses:
    subset: VertexSet
    classes: tuple[tuple[int, VertexSet], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def degree_graph_edges(self) -> int:
        """Edges of the degree graph: one clique per class."""
        return sum(len(members) * (len(members) - 1) // 2 for _, members in self.classes)

    def representatives(self) -> VertexSet:
        mask = 0
        for _, members in self.classes:
            mask |= members.mask & -members.mask
        return VertexSet(self.subset.parent_n, mask)


@dataclass(frozen=True)
class DiversityWitness:
    subset: VertexSet
    distinct_count: int
    representatives: VertexSet

    def verify(self, g: Graph) -> bool:
        """Recompute the distinct degrees of ``G[subset]`` from scratch."""
        classes = degree_classes(g, self.subset)
        return len(classes) == self.distinct_count and classes.representatives() == self.representatives


def degree_classes(g: Graph, u: VertexSet) -> DegreeClasses:
    _check_subset(g, u)
    by_degree: dict[int, int] = {}
    for v in iter_bits(u.mask):
        d = (g.adj[v] & u.mask).bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << v)
    classes = tuple((d, VertexSet(g.n, by_degree[d])) for d in sorted(by_degree))
    return DegreeClasses(u, classes)


def distinct_degree_count(g: Graph, mask: int) -> int:
    seen = 0
    adj = g.adj
    for v in iter_bits(mask):
        seen |= 1 << (adj[v] & mask).bit_count()
    return seen.bit_count()


def _witness(g: Graph, mask: int) -> DiversityWitness:
    classes = degree_classes(g, VertexSet(g.n, mask))
    return DiversityWitness(classes.subset, len(classes), classes.representatives())


def _ceiling(n: int) -> int:
    """Most distinct degrees any subset of ``n`` vertices can show: a graph on
    ``m >= 2`` vertices cannot have both degree 0 and degree ``m - 1``."""
    return n if n <= 1 else max(1, n - 1)


@lru_cache(maxsize=None)
def _masks_by_size(n: int) -> tuple[int, ...]:
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), m)))


def _f_scalar(g: Graph) -> int:
    ceiling = _ceiling(g.n)
    best, best_mask = -1, 0
    for mask in _masks_by_size(g.n):
        c = distinct_degree_count(g, mask)
        if c > best:
            best, best_mask = c, mask
            if best == ceiling:
                break
    return best_mask


def _f_vectorised(g: Graph) -> int:
    n = g.n
    rows = [np.uint64(r) for r in g.adj]
    one = np.uint64(1)
    best_count, best_key = -1, None
    for start in range(0, 1 << n, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.uint64)
        seen = np.zeros_like(masks)
        for v in range(n):
            member = (masks >> np.uint64(v)) & one
            deg = np.bitwise_count(masks & rows[v]).astype(np.uint64)
            seen |= member << deg
        counts = np.bitwise_count(seen)
        top = int(counts.max())
        if top < best_count:
            continue
        cand = masks[counts == top]
        sizes = np.bitwise_count(cand)
        pick = cand[sizes == sizes.min()].min()
        key = (int(sizes.min()), int(pick))
        if top > best_count or key < best_key:
            best_count, best_key = top, key
    return best_key[1]


def f_exact(g: Graph, guard: int = DEFAULT_ENUM_GUARD, method: str = "auto") -> DiversityWitness:
    """Exact ``f(G)`` by enumerating every vertex subset.

    Among subsets attaining the maximum, the witness is the one of smallest
    size, then smallest mask.  ``method`` selects the ``"scalar"`` loop, the
    ``"vectorised"`` numpy sweep, or ``"auto"`` (scalar up to n=12).
    """
    if g.n > guard:
        raise CapabilityExceeded(
            f"exact f(G) limited to n <= {guard} (got n={g.n}); use randomized_witness()"
        )
    if method == "auto":
        method = "scalar" if g.n <= _SCALAR_MAX_N else "vectorised"
    if method == "scalar":
        mask = _f_scalar(g)
    elif method == "vectorised":
        if g.n > 63:
            raise CapabilityExceeded("vectorised enumeration needs n <= 63")
        mask = _f_vectorised(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _witness(g, mask)


def _better(count: int, mask: int, best: tuple[int, int] | None) -> bool:
    if best is None:
        return True
    bc, bm = best
    if count != bc:
        return count > bc
    size, bsize = mask.bit_count(), bm.bit_count()
    return size < bsize or (size == bsize and mask < bm)


def sample_subset(n: int, seed: int, trial: int) -> int:
    """The 1/2-random subset drawn for ``trial`` under master ``seed``."""
    return half_subset(trial_rng(seed, trial), n)


def randomized_witness(g: Graph, trials: int, seed: int) -> DiversityWitness:
    """Best of ``trials`` independent 1/2-random subsets.

    The count is a certified lower bound on ``f(G)``: the returned subset can
    be re-checked with :meth:`DiversityWitness.verify`.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    best: tuple[int, int] | None = None
    for t in range(trials):
        mask = sample_subset(g.n, seed, t)
        c = distinct_degree_count(g, mask)
        if _better(c, mask, best):
            best = (c, mask)
    return _witness(g, best[1])


def theorem1_bound(n: int, hom_value: int) -> float:
    """``(1/250) * sqrt(n / hom)``."""
    if hom_value < 1:
        raise ValueError("hom must be at least 1")
    return math.sqrt(n / hom_value) / 250


def dhat(g: Graph, w: VertexSet) -> float:
    """Sum over unordered pairs of ``w`` of ``5/sqrt(δ+1)``."""
    return float(dhat_decimal(g, w))


def dhat_decimal(g: Graph, w: VertexSet) -> Decimal:
    _check_subset(g, w)
    return numeric.CTX.multiply(Decimal(5), numeric.inv_sqrt_sum(distance_histogram(g, w)))


def dhat_threshold(size: int, k: int) -> Fraction:
    return Fraction(size * size - 3 * k * size, 54 * k)


def dhat_exceeds_threshold(g: Graph, w: VertexSet, k: int) -> bool:
    """``dhat(W) > (|W|^2 - 3k|W|) / 54k``."""
    return numeric.exceeds(dhat_decimal(g, w), dhat_threshold(len(w), k))
