"""Largest cliques and independent sets, ``hom(G)`` and the Caro-Wei bound."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from .errors import CapabilityExceeded
from .graph_core import Graph, VertexSet, complement, iter_bits
from .rng import trial_rng

DEFAULT_GUARD = 64


@dataclass(frozen=True)
class HomWitness:
    kind: Literal["clique", "independent"]
    members: VertexSet

    @property
    def size(self) -> int:
        return len(self.members)

    def is_valid(self, g: Graph) -> bool:
        mask = self.members.mask
        if self.kind == "clique":
            return all(g.adj[v] | (1 << v) | ~mask == -1 for v in iter_bits(mask))
        return all(g.adj[v] & mask == 0 for v in iter_bits(mask))


class CaroWei(NamedTuple):
    total: Fraction  # sum over v of 1/(deg(v)+1)
    weak: Fraction  # v(G)^2 / (2e(G) + v(G))


class HomEstimate(NamedTuple):
    value: int
    witness: HomWitness
    exact: bool


def _relabel(adj: tuple[int, ...], order: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        out.append(row)
    return out


def _clique_search(adj: tuple[int, ...]) -> int:
    """Maximum clique by branch and bound with bitset greedy-colouring bounds.

    Vertices are first reordered by descending degree (ties by index); the
    colouring at each node is the sequential bitset colouring, and branches
    whose colour bound cannot beat the incumbent are cut.  Returns the mask
    of the clique in the original labelling.
    """
    n = len(adj)
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    nadj = _relabel(adj, order)
    best_size = 0
    best_mask = 0

    def expand(cand: int, clique: int, size: int) -> None:
        nonlocal best_size, best_mask
        kmin = best_size - size + 1
        verts: list[int] = []
        colours: list[int] = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~(nadj[v] | low)
                uncoloured ^= low
                if colour >= kmin:
                    verts.append(v)
                    colours.append(colour)
        for i in range(len(verts) - 1, -1, -1):
            if size + colours[i] <= best_size:
                return
            v = verts[i]
            bit = 1 << v
            sub = cand & nadj[v]
            if sub:
                expand(sub, clique | bit, size + 1)
            elif size + 1 > best_size:
                best_size = size + 1
                best_mask = clique | bit
            cand &= ~bit

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        expand((1 << n) - 1, 0, 0)
    finally:
        sys.setrecursionlimit(limit)
    return sum(1 << order[i] for i in iter_bits(best_mask))


def _guard(g: Graph, guard: int) -> None:
    if g.n > guard:
        raise CapabilityExceeded(
            f"exact homogeneous-set search limited to n <= {guard} (got n={g.n}); "
            "raise the guard or use hom_estimate()"
        )


def max_clique(g: Graph, guard: int = DEFAULT_GUARD) -> HomWitness:
    _guard(g, guard)
    w = HomWitness("clique", VertexSet(g.n, _clique_search(g.adj)))
    if not w.is_valid(g):
        raise AssertionError("clique search returned a non-clique")
    return w


def max_independent_set(g: Graph, guard: int = DEFAULT_GUARD) -> HomWitness:
    _guard(g, guard)
    w = HomWitness("independent", VertexSet(g.n, _clique_search(complement(g).adj)))
    if not w.is_valid(g):
        raise AssertionError("independent-set search returned a dependent set")
    return w


def hom(g: Graph, guard: int = DEFAULT_GUARD) -> tuple[int, HomWitness]:
    """Size of the largest homogeneous set with a witness (clique on ties)."""
    clique = max_clique(g, guard)
    indep = max_independent_set(g, guard)
    best = clique if clique.size >= indep.size else indep
    return best.size, best


def greedy_clique(g: Graph) -> VertexSet:
    """Grow a clique from every vertex, always taking the candidate with most
    neighbours inside the remaining candidate set; keep the largest."""
    best = 0
    for start in range(g.n):
        clique = 1 << start
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique |= 1 << v
            cand &= g.adj[v]
        if clique.bit_count() > best.bit_count():
            best = clique
    return VertexSet(g.n, best)


def hom_estimate(g: Graph, seed: int, guard: int = DEFAULT_GUARD) -> HomEstimate:
    """Exact ``hom`` within the guard; beyond it, the larger of a greedy
    clique and a Caro-Wei greedy independent set, flagged inexact."""
    if g.n <= guard:
        value, witness = hom(g, guard)
        return HomEstimate(value, witness, True)
    clique = HomWitness("clique", greedy_clique(g))
    indep = HomWitness("independent", caro_wei_greedy(g, seed))
    best = clique if clique.size >= indep.size else indep
    return HomEstimate(best.size, best, False)


def caro_wei_sum(g: Graph) -> CaroWei:
    total = sum((Fraction(1, d + 1) for d in g.degrees()), Fraction(0))
    n, e = g.n, g.num_edges()
    weak = Fraction(n * n, 2 * e + n) if n else Fraction(0)
    return CaroWei(total, weak)


def caro_wei_greedy(g: Graph, seed: int) -> VertexSet:
    """Vertices that precede all of their neighbours in a uniformly random order."""
    order = trial_rng(seed).permutation(g.n)
    seen = 0
    kept = 0
    for v in order.tolist():
        if not g.adj[v] & seen:
            kept |= 1 << v
        seen |= 1 << v
    return VertexSet(g.n, kept)
