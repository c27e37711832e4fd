"""Exact subgraph density parameters.

All three parameters are maxima of ratios of small integers over subgraphs,
so they are computed with exact rational arithmetic by exhaustive iteration
over vertex subsets (induced subgraphs suffice: for a fixed vertex set each
objective is nondecreasing in the edge count, and the induced subgraph has
the most edges). No floating point appears in any parameter value; floats
enter only in the sampler's edge probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .graphs import Graph

MAX_SUBSET_VERTICES = 24


@dataclass(frozen=True)
class DensityValue:
    value: Fraction
    witness: tuple  # vertex subset achieving the maximum


@dataclass(frozen=True)
class PairDensity:
    value: Fraction
    witness: tuple  # subset of the larger-m2 graph
    swapped: bool  # True if the roles of (G,H) were interchanged


@dataclass(frozen=True)
class DensityReport:
    rho: DensityValue
    m2: Optional[DensityValue]
    m2_pair: Optional[PairDensity]


def _check_size(X: Graph):
    if X.n > MAX_SUBSET_VERTICES:
        raise ValueError(f"subset enumeration capped at {MAX_SUBSET_VERTICES} vertices")


def _subset_vertices(mask):
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def _max_over_subsets(X: Graph, min_size: int, score):
    """Maximize score(edge_count, vertex_count) over induced subgraphs with
    at least min_size vertices. Ties go to the smallest subset, then the
    lexicographically smallest vertex tuple."""
    _check_size(X)
    adj = X.adj
    best = None
    best_key = None
    for mask in range(1, 1 << X.n):
        v = mask.bit_count()
        if v < min_size:
            continue
        e = 0
        rest = mask
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            e += (adj[w] & mask).bit_count()
        e //= 2
        val = score(e, v)
        if val is None:
            continue
        vs = _subset_vertices(mask)
        key = (-val, v, vs)
        if best_key is None or key < best_key:
            best_key = key
            best = DensityValue(val, vs)
    return best


def rho(X: Graph) -> DensityValue:
    """Maximum of e(J)/v(J) over subgraphs J with at least one vertex."""
    if X.n < 1:
        raise ValueError("rho needs at least one vertex")
    return _max_over_subsets(X, 1, lambda e, v: Fraction(e, v))


def m2(X: Graph) -> Optional[DensityValue]:
    """Maximum of (e(J)-1)/(v(J)-2) over subgraphs with >= 3 vertices;
    defined only when X contains a cycle."""
    if not X.has_cycle():
        return None
    return _max_over_subsets(X, 3, lambda e, v: Fraction(e - 1, v - 2) if v > 2 else None)


def m2_pair(G: Graph, H: Graph) -> PairDensity:
    """The asymmetric density parameter: maximize e(J)/(v(J)-2+1/m2(H))
    over subgraphs J of G with >= 2 vertices, after ordering the pair so
    that m2(G) >= m2(H). Both graphs must contain a cycle."""
    m2G = m2(G)
    m2H = m2(H)
    if m2G is None or m2H is None:
        raise ValueError("m2_pair requires both graphs to contain a cycle")
    swapped = False
    if m2G.value < m2H.value:
        G, H = H, G
        m2G, m2H = m2H, m2G
        swapped = True
    inv = Fraction(1, 1) / m2H.value
    best = _max_over_subsets(G, 2, lambda e, v: Fraction(e, 1) / (v - 2 + inv))
    return PairDensity(best.value, best.witness, swapped)


def density_report(X: Graph, pair_with: Optional[Graph] = None) -> DensityReport:
    r = rho(X)
    m = m2(X)
    mp = None
    if pair_with is not None:
        mp = m2_pair(X, pair_with)
    return DensityReport(r, m, mp)


def threshold_p(G: Graph, H: Graph, n: int, c) -> float:
    """Edge probability c * n^(-1/m2(G,H)), clamped to [0,1]; floating
    point is acceptable here because it only drives the sampler."""
    if n < 3:
        raise ValueError("n must be at least 3")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    d = m2_pair(G, H).value
    p = float(c) * float(n) ** (-1.0 / float(d))
    return min(1.0, max(0.0, p))
