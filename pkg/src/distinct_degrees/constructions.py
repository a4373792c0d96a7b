"""Generators for the planted families and Erdős random graphs.

Components always occupy contiguous blocks of vertex indices, so planted
parts can be written down directly: in ``disjoint_cliques(m, k)`` clique
``i`` is ``range(i*k, (i+1)*k)``; in ``example3(k, b, n)`` copy ``c`` is
``range(c*n*b/k, (c+1)*n*b/k)`` and its ``H``-cliques are consecutive runs
of ``b`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidSpecError
from .graph_core import Graph, VertexSet
from .rng import bits_to_mask, trial_rng


def disjoint_cliques(m: int, k: int) -> Graph:
    """``m`` disjoint copies of ``K_k`` on ``m*k`` vertices."""
    if m < 1 or k < 1:
        raise InvalidSpecError(f"disjoint_cliques needs m, k >= 1 (got m={m}, k={k})")
    rows = []
    for i in range(m):
        block = ((1 << k) - 1) << (i * k)
        rows.extend(block ^ (1 << v) for v in range(i * k, (i + 1) * k))
    return Graph(m * k, tuple(rows))


def example3(k: int, b: int, n: int) -> Graph:
    """``k/b`` disjoint copies of the complement of ``H``, where ``H`` is
    ``n/k`` disjoint cliques of size ``b``."""
    if min(k, b, n) < 1 or b > k or k % b or n % k:
        raise InvalidSpecError(f"example3 needs b | k, k | n and b <= k (got k={k}, b={b}, n={n})")
    copy_size = n * b // k
    rows = []
    for c in range(k // b):
        copy_mask = ((1 << copy_size) - 1) << (c * copy_size)
        for v in range(c * copy_size, (c + 1) * copy_size):
            first = c * copy_size + (v - c * copy_size) // b * b
            own = ((1 << b) - 1) << first
            rows.append(copy_mask & ~own)
    return Graph(n, tuple(rows))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """``G(n, p)``: each unordered pair is an edge independently with probability ``p``."""
    if not 0 <= p <= 1:
        raise InvalidSpecError(f"edge probability must lie in [0, 1], got {p}")
    if n == 0:
        return Graph.empty(0)
    coins = trial_rng(seed).random((n, n)) < p
    upper = np.triu(coins, k=1)
    sym = upper | upper.T
    return Graph(n, tuple(bits_to_mask(row) for row in sym))


def planted_parts(family: str, **params) -> list[VertexSet]:
    """The ground-truth components of a planted family."""
    if family == "disjoint_cliques":
        m, k = params["m"], params["k"]
        return [VertexSet(m * k, ((1 << k) - 1) << (i * k)) for i in range(m)]
    if family == "example3":
        k, b, n = params["k"], params["b"], params["n"]
        size = n * b // k
        return [VertexSet(n, ((1 << size) - 1) << (c * size)) for c in range(k // b)]
    raise InvalidSpecError(f"no planted parts for family {family!r}")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    p: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.family not in ("disjoint_cliques", "example3", "random"):
            raise InvalidSpecError(f"unknown family {self.family!r}")
        if self.family == "random":
            if self.p is None or self.seed is None or "n" not in self.params:
                raise InvalidSpecError("random family needs n, p and seed")

    def build(self) -> Graph:
        if self.family == "disjoint_cliques":
            return disjoint_cliques(self.params["m"], self.params["k"])
        if self.family == "example3":
            return example3(self.params["k"], self.params["b"], self.params["n"])
        return random_graph(self.params["n"], self.p, self.seed)

    def describe(self) -> str:
        parts = [f"{key}={self.params[key]}" for key in sorted(self.params)]
        if self.family == "random":
            parts += [f"p={self.p}", f"seed={self.seed}"]
        return f"{self.family}({', '.join(parts)})"
