"""Exact degree-collision probabilities under a 1/2-random vertex subset.

For a pair ``x, y`` let ``s = |Γ(x) - Γ(y)|`` and ``t = |Γ(y) - Γ(x)|``.  When
``U`` keeps each vertex independently with probability 1/2, the degrees
``|Γ(x) ∩ U|`` and ``|Γ(y) ∩ U|`` coincide exactly when ``U`` takes equally
many vertices from the two private neighbourhoods, which has probability
``2^-(s+t) * sum_i C(s,i) C(t,i) = C(s+t, t) / 2^(s+t)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from . import numeric
from .errors import InvalidPairError
from .graph_core import Graph, _check_vertex, distance_histogram

DEFAULT_BIGINT_GUARD = 4096


class ApproxProb(float):
    """Probability evaluated in floating point beyond the exact-arithmetic guard."""

    exact = False


@dataclass(frozen=True)
class CollisionParams:
    s: int
    t: int
    edge: bool

    def __post_init__(self):
        if self.s < 0 or self.t < 0:
            raise ValueError("s and t must be non-negative")
        if self.edge and (self.s < 1 or self.t < 1):
            raise ValueError("an adjacent pair has each endpoint in the other's private neighbourhood")

    @property
    def delta(self) -> int:
        return self.s + self.t - 2 if self.edge else self.s + self.t


@dataclass(frozen=True)
class DegreeGraphExpectation:
    exact: Fraction  # E[e(D)] with x, y in U required for the pair to count
    unconditional: Fraction  # (1/4) * sum of unconditional collision probabilities
    bound: float  # sum over pairs of 5/sqrt(delta+1)
    bound_decimal: Decimal

    def below_bound(self) -> bool:
        # each pair's term sits strictly under its bound term; with no pairs
        # both sums are empty and the comparison is vacuous
        if self.bound_decimal == 0:
            return self.exact == 0 and self.unconditional == 0
        return numeric.exceeds(self.bound_decimal, self.exact) and numeric.exceeds(
            self.bound_decimal, self.unconditional
        )


def collision_prob_exact(s: int, t: int, guard: int = DEFAULT_BIGINT_GUARD) -> Fraction | ApproxProb:
    """``P(Bin(s, 1/2) == Bin(t, 1/2))`` for independent binomials.

    Exact when ``s + t <= guard``: the convolution sum and the Vandermonde
    closed form are both evaluated and must agree.  Beyond the guard the
    closed form is evaluated in log space and returned as :class:`ApproxProb`.
    """
    if s < 0 or t < 0:
        raise ValueError("s and t must be non-negative")
    if s + t > guard:
        log_p = (
            math.lgamma(s + t + 1) - math.lgamma(s + 1) - math.lgamma(t + 1) - (s + t) * math.log(2)
        )
        return ApproxProb(math.exp(log_p))
    # C(s,i)C(t,i) term by term; each division is exact
    term = total = 1
    for i in range(min(s, t)):
        term = term * (s - i) * (t - i) // ((i + 1) * (i + 1))
        total += term
    closed = math.comb(s + t, t)
    if total != closed:
        raise AssertionError(f"Vandermonde identity failed at s={s}, t={t}")
    return Fraction(closed, 1 << (s + t))


def collision_params(g: Graph, x: int, y: int) -> CollisionParams:
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise InvalidPairError(f"collision needs distinct vertices, got {x} twice")
    ax, ay = g.adj[x], g.adj[y]
    return CollisionParams((ax & ~ay).bit_count(), (ay & ~ax).bit_count(), bool(ax >> y & 1))


def collision_prob_pair(g: Graph, x: int, y: int) -> Fraction | ApproxProb:
    """``P(deg_U(x) == deg_U(y))`` over the whole random ``U``.

    ``x`` and ``y`` are themselves sampled; nothing is conditioned on their
    membership in ``U``.
    """
    p = collision_params(g, x, y)
    return collision_prob_exact(p.s, p.t)


def degree_graph_edge_prob(g: Graph, x: int, y: int) -> Fraction | ApproxProb:
    """``P(x, y in U and deg_U(x) == deg_U(y))``, the chance that ``xy`` is an
    edge of the degree graph.

    For a non-adjacent pair the membership of ``x`` and ``y`` is independent
    of both degrees, giving a quarter of :func:`collision_prob_pair`.  For an
    adjacent pair ``y`` sits in the private neighbourhood of ``x`` (and vice
    versa), so conditioning on both being present removes one vertex from each
    side: the factor becomes ``collision_prob_exact(s-1, t-1) / 4``.
    """
    p = collision_params(g, x, y)
    q = collision_prob_exact(p.s - 1, p.t - 1) if p.edge else collision_prob_exact(p.s, p.t)
    return ApproxProb(q / 4) if isinstance(q, ApproxProb) else q / 4


def lemma31_bound(delta: int) -> float:
    if delta < 0:
        raise ValueError("distance must be non-negative")
    return 20 / math.sqrt(delta + 1)


def below_collision_bound(p: Fraction, delta: int) -> bool:
    """Exact test of ``p < 20/sqrt(delta+1)`` by squaring both sides."""
    return p * p * (delta + 1) < 400


def central_binomial_ok(s: int) -> bool:
    """Exact test of ``2^-s C(s, s//2) < 10/sqrt(s+1)``, squared:
    ``C(s, s//2)^2 (s+1) < 100 * 4^s``."""
    c = math.comb(s, s // 2)
    return c * c * (s + 1) < 100 << (2 * s)


def central_binomial_sweep(s_max: int) -> int | None:
    """First ``s`` in ``[0, s_max]`` where :func:`central_binomial_ok` fails,
    or None.  ``C(s, s//2)`` is updated incrementally instead of recomputed."""
    c = 1  # C(0, 0)
    for s in range(s_max + 1):
        if not c * c * (s + 1) < 100 << (2 * s):
            return s
        j = s // 2
        # C(2j+1, j) = C(2j, j)(2j+1)/(j+1);  C(2j+2, j+1) = 2 C(2j+1, j)
        c = c * (s + 1) // (j + 1) if s % 2 == 0 else 2 * c
    return None


def collision_bound_chain(s: int, t: int, edge: bool) -> dict[str, bool]:
    """Each step of the bound chain for ``t <= s``, evaluated exactly."""
    if t > s:
        s, t = t, s
    delta = s + t - 2 if edge else s + t
    p = collision_prob_exact(s, t)
    return {
        # C(s+t,t)/2^(s+t) <= C(s,s//2)/2^s   <=>   C(s+t,t) <= 2^t C(s,s//2)
        "max_term": math.comb(s + t, t) <= math.comb(s, s // 2) << t,
        "central": central_binomial_ok(s),
        # 10/sqrt(s+1) <= 20/sqrt(delta+1)   <=>   delta+1 <= 4(s+1)
        "distance": delta + 1 <= 4 * (s + 1),
        "lemma": below_collision_bound(p, delta),
    }


def _pair_keys(g: Graph) -> Counter:
    """Multiset of ``(s, t, edge)`` over unordered pairs, with ``s >= t``."""
    keys: Counter = Counter()
    adj = g.adj
    for x in range(g.n):
        ax = adj[x]
        for y in range(x + 1, g.n):
            ay = adj[y]
            s, t = (ax & ~ay).bit_count(), (ay & ~ax).bit_count()
            if s < t:
                s, t = t, s
            keys[(s, t, bool(ax >> y & 1))] += 1
    return keys


def expected_degree_graph_edges(g: Graph) -> DegreeGraphExpectation:
    exact = Fraction(0)
    unconditional = Fraction(0)
    hist: Counter = Counter()
    for (s, t, edge), count in _pair_keys(g).items():
        p = collision_prob_exact(s, t)
        unconditional += count * Fraction(p) / 4
        exact += count * Fraction(collision_prob_exact(s - 1, t - 1) if edge else p) / 4
        hist[s + t - 2 if edge else s + t] += count
    bound_dec = numeric.CTX.multiply(Decimal(5), numeric.inv_sqrt_sum(hist))
    return DegreeGraphExpectation(exact, unconditional, float(bound_dec), bound_dec)


def distance_mass(g: Graph, x: int) -> Fraction:
    """``sum over y != x of 1/(δ(x, y) + 1)``."""
    _check_vertex(g, x)
    adj = g.adj
    ax, bx = adj[x], 1 << x
    hist: Counter = Counter()
    for y in range(g.n):
        if y != x:
            hist[((ax & ~(1 << y)) ^ (adj[y] & ~bx)).bit_count()] += 1
    return numeric.inv_sum(hist)


@dataclass(frozen=True)
class DistanceSumTerms:
    """Both sides of ``n hom >= S1 >= C(n,2)^-1 S2^2`` where ``S1`` sums
    ``1/(δ+1)`` and ``S2`` sums ``1/sqrt(δ+1)`` over unordered pairs."""

    n_hom: int
    inv_sum: Fraction
    cs_lower: Decimal

    @property
    def holds(self) -> bool:
        return self.n_hom >= self.inv_sum and numeric.at_least(self.inv_sum, self.cs_lower)


def distance_sum_terms(g: Graph, hom_value: int, hist: Counter | None = None) -> DistanceSumTerms:
    if hist is None:
        hist = distance_histogram(g)
    pairs = g.n * (g.n - 1) // 2
    s1 = numeric.inv_sum(hist)
    if pairs:
        s2 = numeric.inv_sqrt_sum(hist)
        lower = numeric.CTX.divide(numeric.CTX.multiply(s2, s2), Decimal(pairs))
    else:
        lower = Decimal(0)
    return DistanceSumTerms(g.n * hom_value, s1, lower)


def pair_collision_bound_ok(g: Graph) -> bool:
    """Every pair's collision probability sits strictly under ``20/sqrt(δ+1)``."""
    for (s, t, edge), _ in _pair_keys(g).items():
        delta = s + t - 2 if edge else s + t
        if not below_collision_bound(Fraction(collision_prob_exact(s, t)), delta):
            return False
    return True


__all__ = [
    "ApproxProb",
    "CollisionParams",
    "DegreeGraphExpectation",
    "DistanceSumTerms",
    "below_collision_bound",
    "central_binomial_ok",
    "central_binomial_sweep",
    "collision_params",
    "collision_prob_exact",
    "collision_prob_pair",
    "degree_graph_edge_prob",
    "distance_mass",
    "distance_sum_terms",
    "expected_degree_graph_edges",
    "lemma31_bound",
    "collision_bound_chain",
    "pair_collision_bound_ok",
]
