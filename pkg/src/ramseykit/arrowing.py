"""Arrowing decisions: does every red/blue edge coloring of F contain a red
copy of G or a blue copy of H?

The decision procedure is a depth-first search over the edges of F in a
fixed order (descending endpoint degree sum), trying red then blue, and
pruning a branch as soon as the partial color class contains its target.
The containment check after coloring edge (u,v) only looks for copies
through (u,v), since earlier partial classes were already copy-free.

Outcomes are three-valued: a witness coloring (no arrowing), an exhausted
search (arrowing proven), or an explicit unknown when the node budget runs
out. A budget hit is never silently reported as a verdict.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Optional, Tuple

from .canon import certificate
from .graphs import Graph

RED = "red"
BLUE = "blue"

DEFAULT_NODE_BUDGET = int(os.environ.get("RAMSEYKIT_NODE_BUDGET", 10**8))


class UnknownVerdictError(RuntimeError):
    """An operation needed a definite sub-verdict but the search budget ran
    out before one was reached."""


class _BudgetHit(Exception):
    pass


# ---------------------------------------------------------------------------
# Subgraph containment


@lru_cache(maxsize=4096)
def _pattern_plan(pattern: Graph):
    """Vertex visit order for embedding search: components by descending
    size, each entered at a max-degree vertex and traversed so every later
    vertex sees its already-placed neighbors."""
    comps = sorted(pattern.connected_components(), key=len, reverse=True)
    order = []
    placed = set()
    for comp in comps:
        start = max(comp, key=pattern.degree)
        order.append(start)
        placed.add(start)
        frontier = [v for v in comp if v != start]
        while frontier:
            nxt = max(
                frontier,
                key=lambda v: (sum(1 for w in pattern.neighbors(v) if w in placed), pattern.degree(v)),
            )
            order.append(nxt)
            placed.add(nxt)
            frontier.remove(nxt)
    prev_nbrs = []
    seen = []
    for v in order:
        prev_nbrs.append(tuple(w for w in seen if pattern.has_edge(v, w)))
        seen.append(v)
    degs = tuple(pattern.degree(v) for v in range(pattern.n))
    return tuple(order), tuple(prev_nbrs), degs


def _extend(hadj, hn, order, prev_nbrs, degs, mapping, used, i):
    if i == len(order):
        return True
    pv = order[i]
    anchors = prev_nbrs[i]
    if anchors:
        cand = (1 << hn) - 1
        for q in anchors:
            cand &= hadj[mapping[q]]
    else:
        cand = (1 << hn) - 1
    cand &= ~used
    need = degs[pv]
    while cand:
        h = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if hadj[h].bit_count() >= need:
            mapping[pv] = h
            if _extend(hadj, hn, order, prev_nbrs, degs, mapping, used | (1 << h), i + 1):
                return True
            del mapping[pv]
    return False


def contains_copy(host: Graph, pattern: Graph) -> Optional[Dict[int, int]]:
    """Injective map carrying every pattern edge to a host edge, or None."""
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    order, prev_nbrs, degs = _pattern_plan(pattern)
    mapping: Dict[int, int] = {}
    if _extend(host.adj, host.n, order, prev_nbrs, degs, mapping, 0, 0):
        return dict(mapping)
    return None


@lru_cache(maxsize=4096)
def _anchored_plans(pattern: Graph):
    """For each oriented pattern edge, a visit order starting with that
    edge's endpoints; used to find copies through a specific host edge."""
    plans = []
    for a, b in pattern.edges():
        for pa, pb in ((a, b), (b, a)):
            order = [pa, pb]
            placed = {pa, pb}
            rest = [v for v in range(pattern.n) if v not in placed]
            while rest:
                nxt = max(
                    rest,
                    key=lambda v: (sum(1 for w in pattern.neighbors(v) if w in placed), pattern.degree(v)),
                )
                order.append(nxt)
                placed.add(nxt)
                rest.remove(nxt)
            prev_nbrs = []
            seen = []
            for v in order:
                prev_nbrs.append(tuple(w for w in seen if pattern.has_edge(v, w)))
                seen.append(v)
            plans.append((tuple(order), tuple(prev_nbrs)))
    degs = tuple(pattern.degree(v) for v in range(pattern.n))
    return tuple(plans), degs


def _contains_through_edge(hadj, hn, pattern: Graph, u, v) -> bool:
    """Is there a copy of the pattern whose image uses host edge (u,v)?"""
    plans, degs = _anchored_plans(pattern)
    du = hadj[u].bit_count()
    dv = hadj[v].bit_count()
    for order, prev_nbrs in plans:
        pa, pb = order[0], order[1]
        if degs[pa] > du or degs[pb] > dv:
            continue
        mapping = {pa: u, pb: v}
        if _extend(hadj, hn, order, prev_nbrs, degs, mapping, (1 << u) | (1 << v), 2):
            return True
    return False


# ---------------------------------------------------------------------------
# Colorings


@dataclass
class EdgeColoring:
    """Red/blue assignment on the edges of a host graph; edges absent from
    the assignment are unassigned."""

    host: Graph
    assignment: Dict[Tuple[int, int], str] = field(default_factory=dict)

    def is_total(self) -> bool:
        return set(self.assignment) == set(self.host.edges())

    def color_class(self, color: str) -> Graph:
        edges = [e for e, c in self.assignment.items() if c == color]
        return Graph.from_edges(self.host.n, edges)

    def is_good(self, G: Graph, H: Graph) -> bool:
        """Total, no red copy of G, no blue copy of H."""
        return (
            self.is_total()
            and contains_copy(self.color_class(RED), G) is None
            and contains_copy(self.color_class(BLUE), H) is None
        )


@dataclass
class FindResult:
    coloring: Optional[EdgeColoring]
    exhausted: bool  # True: whole space pruned, so no good coloring exists
    nodes: int


@dataclass
class ArrowVerdict:
    arrows: Optional[bool]  # None = unknown (budget hit)
    witness: Optional[EdgeColoring]
    nodes: int
    elapsed: float


def _check_targets(G: Graph, H: Graph):
    if G.edge_count == 0 or H.edge_count == 0:
        raise ValueError("target graphs must have at least one edge")


def find_good_coloring(
    F: Graph,
    G: Graph,
    H: Graph,
    budget: int = DEFAULT_NODE_BUDGET,
    symmetry: Optional[bool] = None,
) -> FindResult:
    """Search for a total coloring of F with no red G and no blue H.

    When G and H are isomorphic the first edge's color may be fixed
    (color-swap symmetry); this is on by default exactly in that case.
    """
    _check_targets(G, H)
    n = F.n
    edges = sorted(F.edges(), key=lambda e: -(F.degree(e[0]) + F.degree(e[1])))
    m = len(edges)
    if symmetry is None:
        symmetry = certificate(G) == certificate(H)
    red = [0] * n
    blue = [0] * n
    assign = [None] * m
    nodes = 0

    def dfs(i):
        nonlocal nodes
        if i == m:
            return True
        u, v = edges[i]
        choices = (RED,) if (symmetry and i == 0) else (RED, BLUE)
        for color in choices:
            nodes += 1
            if nodes > budget:
                raise _BudgetHit
            cls, pat = (red, G) if color == RED else (blue, H)
            cls[u] |= 1 << v
            cls[v] |= 1 << u
            if not _contains_through_edge(cls, n, pat, u, v):
                assign[i] = color
                if dfs(i + 1):
                    return True
            cls[u] &= ~(1 << v)
            cls[v] &= ~(1 << u)
        return False

    try:
        found = dfs(0)
    except _BudgetHit:
        return FindResult(None, exhausted=False, nodes=nodes)
    if found:
        coloring = EdgeColoring(F, {edges[i]: assign[i] for i in range(m)})
        return FindResult(coloring, exhausted=False, nodes=nodes)
    return FindResult(None, exhausted=True, nodes=nodes)


def arrows(F: Graph, G: Graph, H: Graph, budget: int = DEFAULT_NODE_BUDGET) -> ArrowVerdict:
    """Decide F -> (G,H). Isolated vertices of F are stripped first; they
    cannot affect any coloring."""
    _check_targets(G, H)
    t0 = time.perf_counter()
    F = F.without_isolated()
    res = find_good_coloring(F, G, H, budget=budget)
    elapsed = time.perf_counter() - t0
    if res.coloring is not None:
        return ArrowVerdict(False, res.coloring, res.nodes, elapsed)
    if res.exhausted:
        return ArrowVerdict(True, None, res.nodes, elapsed)
    return ArrowVerdict(None, None, res.nodes, elapsed)


def naive_arrows(F: Graph, G: Graph, H: Graph) -> bool:
    """Reference oracle: enumerate all 2^|E(F)| total colorings with no
    pruning; used to cross-check the DFS."""
    _check_targets(G, H)
    F = F.without_isolated()
    n = F.n
    edges = F.edges()
    m = len(edges)
    g_order, g_prev, g_degs = _pattern_plan(G)
    h_order, h_prev, h_degs = _pattern_plan(H)
    for mask in range(1 << m):
        red = [0] * n
        blue = [0] * n
        for i, (u, v) in enumerate(edges):
            cls = red if (mask >> i) & 1 == 0 else blue
            cls[u] |= 1 << v
            cls[v] |= 1 << u
        if not _extend(red, n, g_order, g_prev, g_degs, {}, 0, 0) and not _extend(
            blue, n, h_order, h_prev, h_degs, {}, 0, 0
        ):
            return False
    return True


@dataclass
class MinimalityReport:
    is_ramsey: Optional[bool]
    per_edge: Dict[Tuple[int, int], Optional[EdgeColoring]]
    is_minimal: Optional[bool]


def is_ramsey_minimal(
    F: Graph, G: Graph, H: Graph, budget: int = DEFAULT_NODE_BUDGET
) -> MinimalityReport:
    """F arrows (G,H) and every single-edge deletion stops arrowing."""
    F = F.without_isolated()
    top = arrows(F, G, H, budget=budget)
    if top.arrows is None:
        return MinimalityReport(None, {}, None)
    if not top.arrows:
        return MinimalityReport(False, {}, False)
    per_edge: Dict[Tuple[int, int], Optional[EdgeColoring]] = {}
    unknown = False
    for e in F.edges():
        sub = F.delete_edge(*e)
        res = find_good_coloring(sub, G, H, budget=budget)
        if res.coloring is not None:
            per_edge[e] = res.coloring
        elif res.exhausted:
            per_edge[e] = None  # F-e still arrows: not minimal
        else:
            per_edge[e] = None
            unknown = True
    if unknown:
        return MinimalityReport(True, per_edge, None)
    return MinimalityReport(True, per_edge, all(w is not None for w in per_edge.values()))


def ramsey_number_complete(
    G: Graph, H: Graph, cap: int, budget: int = DEFAULT_NODE_BUDGET
) -> Optional[int]:
    """Smallest N <= cap with K_N -> (G,H), or None."""
    if cap < 2:
        raise ValueError("cap must be at least 2")
    for N in range(2, cap + 1):
        v = arrows(Graph.complete(N), G, H, budget=budget)
        if v.arrows is None:
            raise UnknownVerdictError(f"budget exhausted deciding K_{N} -> (G,H)")
        if v.arrows:
            return N
    return None
