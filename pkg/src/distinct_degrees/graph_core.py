"""Dense bitset graphs, vertex subsets and the neighbourhood distance.

A graph on ``n`` vertices is stored as ``n`` integers; bit ``u`` of ``adj[v]``
is set iff ``uv`` is an edge.  Vertices are the dense integers ``0..n-1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InvalidPairError, InvalidSubsetError, InvalidVertexError


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    parent_n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.parent_n:
            raise InvalidSubsetError(
                f"mask {self.mask:#x} has bits outside [0, {self.parent_n})"
            )

    @classmethod
    def of(cls, parent_n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < parent_n:
                raise InvalidSubsetError(f"vertex {v} outside [0, {parent_n})")
            mask |= 1 << v
        return cls(parent_n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.parent_n and bool(self.mask >> v & 1)

    def members(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self):
        return f"VertexSet({self.members()})"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    _full: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        object.__setattr__(self, "adj", tuple(self.adj))
        object.__setattr__(self, "_full", (1 << self.n) - 1)
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return self._full

    def vertices(self) -> VertexSet:
        return VertexSet(self.n, self._full)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v} outside [0, {g.n})")


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.parent_n != g.n or s.mask >> g.n:
        raise InvalidSubsetError(f"subset of a {s.parent_n}-vertex graph used with n={g.n}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def induced(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """``G[s]`` with vertices renumbered in increasing order, plus the map old -> new."""
    _check_subset(g, s)
    old = s.members()
    index = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for u in iter_bits(g.adj[v] & s.mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(old), tuple(rows)), index


def degree_in(g: Graph, v: int, s: VertexSet) -> int:
    """``|Γ(v) ∩ s|``; membership of ``v`` itself in ``s`` does not matter."""
    _check_vertex(g, v)
    _check_subset(g, s)
    return (g.adj[v] & s.mask).bit_count()


def nbhd_distance(g: Graph, x: int, y: int) -> int:
    """``|(Γ(x) - {y}) △ (Γ(y) - {x})|``, defined for ``x != y``."""
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise InvalidPairError(f"neighbourhood distance needs distinct vertices, got {x} twice")
    return ((g.adj[x] & ~(1 << y)) ^ (g.adj[y] & ~(1 << x))).bit_count()


def distance_table(g: Graph) -> list[list[int]]:
    """Full symmetric matrix of neighbourhood distances (zero diagonal)."""
    adj = g.adj
    table = [[0] * g.n for _ in range(g.n)]
    for x in range(g.n):
        ax = adj[x]
        bx = 1 << x
        for y in range(x + 1, g.n):
            d = ((ax & ~(1 << y)) ^ (adj[y] & ~bx)).bit_count()
            table[x][y] = d
            table[y][x] = d
    return table


def distance_histogram(g: Graph, w: VertexSet | None = None) -> Counter:
    """Counts of each distance value over the unordered pairs of ``w`` (default V)."""
    members = w.members() if w is not None else list(range(g.n))
    adj = g.adj
    hist: Counter = Counter()
    for i, x in enumerate(members):
        ax = adj[x]
        bx = 1 << x
        for y in members[i + 1:]:
            hist[((ax & ~(1 << y)) ^ (adj[y] & ~bx)).bit_count()] += 1
    return hist
