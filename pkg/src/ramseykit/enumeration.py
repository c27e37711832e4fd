"""Isomorph-free graph generation and Ramsey-minimal catalogs.

Generation is by canonical augmentation: graphs grow one edge at a time
(edge between existing vertices, pendant edge to a fresh vertex, or a
fresh disjoint edge), and a child is kept only when deleting its canonical
last edge - the lexicographically largest edge of the canonical
representative - leads back to the parent it was grown from. Each
isomorphism class with no isolated vertices is therefore visited exactly
once without a global dedupe table; a small per-parent table removes
relabeled duplicates among one parent's children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .arrowing import (
    DEFAULT_NODE_BUDGET,
    arrows,
    contains_copy,
    find_good_coloring,
    is_ramsey_minimal,
)
from .canon import canonical_representative, certificate
from .density import m2_pair, rho
from .graph6 import emit_graph6
from .graphs import DEFAULT_VERTEX_CAP, Graph


@dataclass(frozen=True)
class SearchBounds:
    max_vertices: int
    max_edges: int
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if self.max_vertices < 0 or self.max_edges < 0:
            raise ValueError("bounds must be nonnegative")
        if self.max_vertices > DEFAULT_VERTEX_CAP:
            raise ValueError(f"max_vertices exceeds vertex cap {DEFAULT_VERTEX_CAP}")


def _canonical_last_edge(rep: Graph) -> Tuple[int, int]:
    return max(rep.edges())


def _parent_rep(rep: Graph) -> Graph:
    """Generation parent: delete the canonical last edge, drop isolated
    vertices, canonicalize."""
    shrunk = rep.delete_edge(*_canonical_last_edge(rep)).without_isolated()
    return canonical_representative(shrunk)


def _children(rep: Graph, bounds: SearchBounds) -> Iterator[Graph]:
    n = rep.n
    candidates = []
    if rep.edge_count + 1 > bounds.max_edges:
        return
    # new edge between existing vertices
    for u in range(n):
        for v in range(u + 1, n):
            if not rep.has_edge(u, v):
                candidates.append(rep.add_edge(u, v))
    # pendant edge to one fresh vertex
    if n + 1 <= bounds.max_vertices:
        grown = Graph(n + 1, rep.adj + (0,))
        for u in range(n):
            candidates.append(grown.add_edge(u, n))
    # fresh disjoint edge
    if n + 2 <= bounds.max_vertices:
        grown = Graph(n + 2, rep.adj + (0, 0))
        candidates.append(grown.add_edge(n, n + 1))
    seen = set()
    for child in candidates:
        child_rep = canonical_representative(child)
        cert = certificate(child_rep)
        if cert in seen:
            continue
        seen.add(cert)
        if _parent_rep(child_rep) == rep:
            yield child_rep


def enumerate_graphs(bounds: SearchBounds) -> Iterator[Graph]:
    """All isomorphism classes with no isolated vertices, at most
    max_vertices vertices and max_edges edges, each exactly once, in
    nondecreasing edge count. Canonical representatives are emitted."""
    if bounds.max_vertices < 2 or bounds.max_edges < 1:
        return
    level = [canonical_representative(Graph.from_edges(2, [(0, 1)]))]
    yield level[0]
    for _ in range(1, bounds.max_edges):
        nxt: List[Graph] = []
        for g in level:
            for child in _children(g, bounds):
                nxt.append(child)
                yield child
        if not nxt:
            return
        level = nxt


@dataclass
class CatalogMember:
    graph: Graph
    minimality: object  # MinimalityReport

    def digest(self) -> dict:
        return {
            "graph6": emit_graph6(self.graph),
            "vertices": self.graph.n,
            "edges": self.graph.edge_count,
            "edge_witnesses": sum(
                1 for w in self.minimality.per_edge.values() if w is not None
            ),
        }


@dataclass
class MinimalCatalog:
    pair: Tuple[Graph, Graph]
    bounds: SearchBounds
    members: List[CatalogMember]
    complete: bool  # False when any arrowing call hit its budget

    @property
    def completeness(self) -> str:
        return "complete within bounds" if self.complete else "budget-limited"

    def member_graphs(self) -> List[Graph]:
        return [m.graph for m in self.members]

    def to_document(self) -> dict:
        return {
            "pair": [emit_graph6(self.pair[0]), emit_graph6(self.pair[1])],
            "bounds": {
                "max_vertices": self.bounds.max_vertices,
                "max_edges": self.bounds.max_edges,
                "node_budget": self.bounds.node_budget,
            },
            "members": [m.digest() for m in self.members],
            "completeness": self.completeness,
        }


def enumerate_ramsey_minimal(G: Graph, H: Graph, bounds: SearchBounds) -> MinimalCatalog:
    """Every Ramsey-minimal graph for (G,H) within the bounds.

    Pre-filters, cheapest first: the candidate must contain a copy of G and
    a copy of H (a monochromatic copy needs a copy), then must arrow, then
    must lose arrowing on every single-edge deletion. A candidate that
    properly contains an already-found member is skipped: it arrows but
    cannot be minimal."""
    budget = bounds.node_budget
    members: List[CatalogMember] = []
    complete = True
    min_edges = max(G.edge_count, H.edge_count)
    for F in enumerate_graphs(bounds):
        if F.edge_count < min_edges:
            continue
        if contains_copy(F, G) is None or contains_copy(F, H) is None:
            continue
        if any(
            m.graph.edge_count < F.edge_count and contains_copy(F, m.graph) is not None
            for m in members
        ):
            continue
        verdict = arrows(F, G, H, budget=budget)
        if verdict.arrows is None:
            complete = False
            continue
        if not verdict.arrows:
            continue
        report = is_ramsey_minimal(F, G, H, budget=budget)
        if report.is_minimal is None:
            complete = False
            continue
        if report.is_minimal:
            members.append(CatalogMember(F, report))
    return MinimalCatalog((G, H), bounds, members, complete)


@dataclass
class DensityAuditEntry:
    graph: Graph
    rho_value: object  # Fraction
    passed: bool


@dataclass
class DensityAuditReport:
    threshold: object  # Fraction, the pair density
    entries: List[DensityAuditEntry]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries)


def catalog_density_audit(catalog: MinimalCatalog, G: Graph, H: Graph) -> DensityAuditReport:
    """Check rho(F) > m2(G,H) for every catalog member; a violation would
    signal an implementation bug, not new mathematics."""
    d = m2_pair(G, H).value
    entries = []
    for member in catalog.members:
        r = rho(member.graph).value
        entries.append(DensityAuditEntry(member.graph, r, r > d))
    return DensityAuditReport(d, entries)
