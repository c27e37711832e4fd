"""Immutable simple graphs on small vertex sets.

Vertices are labeled 0..n-1 and adjacency is stored as one integer bitset
per vertex, so everything downstream (embedding search, coloring DFS,
subset enumeration) works on machine-word bit operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

DEFAULT_VERTEX_CAP = 64

# Target-pair expressions (large matchings in particular) are structural
# values never fed to exhaustive search, so they get a looser cap.
SPEC_BUILD_CAP = 1024


class VertexCapError(ValueError):
    """A construction would exceed the configured vertex cap."""


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; no self-loops, symmetric adjacency."""

    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1 if self.n else 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} mentions a vertex >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            row = self.adj[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")

    @staticmethod
    def from_edges(n: int, edges, cap: int = DEFAULT_VERTEX_CAP) -> "Graph":
        if n > cap:
            raise VertexCapError(f"{n} vertices exceeds cap {cap}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int, cap: int = DEFAULT_VERTEX_CAP) -> "Graph":
        return Graph.from_edges(n, [], cap=cap)

    @staticmethod
    def complete(n: int, cap: int = DEFAULT_VERTEX_CAP) -> "Graph":
        if n > cap:
            raise VertexCapError(f"{n} vertices exceeds cap {cap}")
        full = (1 << n) - 1 if n else 0
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.adj[v]
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            yield u

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u},{v})")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def delete_edge(self, u: int, v: int) -> "Graph":
        """Remove one edge; the vertex set (including any newly isolated
        endpoints) is kept."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm) -> "Graph":
        """Apply a permutation (old label -> new label)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        adj = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return Graph(self.n, tuple(adj))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..k-1 in
        ascending original order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for v in vs:
            row = self.adj[v]
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                if u in pos:
                    adj[pos[v]] |= 1 << pos[u]
        return Graph(len(vs), tuple(adj))

    def disjoint_union(self, other: "Graph", cap: int = DEFAULT_VERTEX_CAP) -> "Graph":
        n = self.n + other.n
        if n > cap:
            raise VertexCapError(f"{n} vertices exceeds cap {cap}")
        adj = list(self.adj) + [row << self.n for row in other.adj]
        return Graph(n, tuple(adj))

    def isolated_vertices(self) -> list:
        return [v for v in range(self.n) if not self.adj[v]]

    def without_isolated(self) -> "Graph":
        keep = [v for v in range(self.n) if self.adj[v]]
        return self.induced(keep)

    def connected_components(self) -> list:
        """Vertex sets of components, each a sorted list."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            frontier = 1 << s
            comp = frontier
            while frontier:
                nxt = 0
                row = frontier
                while row:
                    v = (row & -row).bit_length() - 1
                    row &= row - 1
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            vs = []
            while comp:
                v = (comp & -comp).bit_length() - 1
                comp &= comp - 1
                vs.append(v)
            comps.append(vs)
        return comps

    def component_graphs(self) -> list:
        return [self.induced(vs) for vs in self.connected_components()]

    def has_cycle(self) -> bool:
        for vs in self.connected_components():
            sub = self.induced(vs)
            if sub.edge_count >= sub.n:
                return True
        return False

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1


# ---------------------------------------------------------------------------
# Component classification


@dataclass(frozen=True)
class ComponentInfo:
    graph: Graph
    kind: str  # "isolated" | "K2" | "star" | "tree" | "cyclic"
    star_size: Optional[int] = None
    odd: Optional[bool] = None


def classify_component(c: Graph) -> ComponentInfo:
    """Tag a connected graph as K2 / star (r>=2) / non-star tree / cyclic.

    The four kinds are exhaustive and mutually exclusive for connected
    graphs with at least one edge; a bare vertex is tagged "isolated".
    """
    if c.edge_count == 0:
        return ComponentInfo(c, "isolated")
    if c.edge_count == 1:
        return ComponentInfo(c, "K2")
    if c.edge_count >= c.n:
        return ComponentInfo(c, "cyclic")
    # acyclic connected with >= 2 edges: star iff some vertex meets every edge
    maxdeg = max(c.degree(v) for v in range(c.n))
    if maxdeg == c.edge_count:
        r = c.edge_count
        return ComponentInfo(c, "star", star_size=r, odd=bool(r % 2))
    return ComponentInfo(c, "tree")


def components(g: Graph) -> list:
    return [classify_component(c) for c in g.component_graphs()]


# ---------------------------------------------------------------------------
# Graph expressions: S(r), jK2, P(n), C(n), K(n), disjoint unions


@dataclass(frozen=True)
class Star:
    r: int


@dataclass(frozen=True)
class Matching:
    j: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple


GraphSpec = Union[Star, Matching, Path, Cycle, Complete, DisjointUnion]


def build(spec: GraphSpec, cap: int = SPEC_BUILD_CAP) -> Graph:
    """Materialize a graph expression as a concrete graph."""
    if isinstance(spec, Star):
        if spec.r < 1:
            raise ValueError("star needs r >= 1")
        return Graph.from_edges(spec.r + 1, [(0, i) for i in range(1, spec.r + 1)], cap=cap)
    if isinstance(spec, Matching):
        if spec.j < 0:
            raise ValueError("matching needs j >= 0")
        return Graph.from_edges(2 * spec.j, [(2 * i, 2 * i + 1) for i in range(spec.j)], cap=cap)
    if isinstance(spec, Path):
        if spec.n < 1:
            raise ValueError("path needs n >= 1")
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)], cap=cap)
    if isinstance(spec, Cycle):
        if spec.n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)], cap=cap)
    if isinstance(spec, Complete):
        if spec.n < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph.complete(spec.n, cap=cap)
    if isinstance(spec, DisjointUnion):
        g = Graph.empty(0)
        for part in spec.parts:
            g = g.disjoint_union(build(part, cap=cap), cap=cap)
        return g
    raise TypeError(f"not a graph spec: {spec!r}")


_TERM_RE = re.compile(r"^(\d+)?([SKPC])(\d+)$")


def parse_spec(text: str) -> GraphSpec:
    """Parse expression syntax like ``S5+S2``, ``122K2``, ``C5``, ``K6``, ``P4``.

    A leading integer multiplies the term: ``3K2`` is a matching of size 3
    and ``2S3`` is two disjoint copies of S(3).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty graph expression")
    parts = []
    for term in text.split("+"):
        m = _TERM_RE.match(term.strip())
        if not m:
            raise ValueError(f"cannot parse graph term {term!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        kind, num = m.group(2), int(m.group(3))
        if kind == "K" and num == 2:
            parts.append(Matching(mult))
            continue
        if m.group(1) is not None and mult == 0:
            raise ValueError(f"zero multiplier only allowed for K2 terms: {term!r}")
        prim: GraphSpec
        if kind == "S":
            prim = Star(num)
        elif kind == "K":
            prim = Complete(num)
        elif kind == "P":
            prim = Path(num)
        else:
            prim = Cycle(num)
        parts.extend([prim] * mult)
    if len(parts) == 1:
        return parts[0]
    return DisjointUnion(tuple(parts))


def build_from_text(text: str, cap: int = SPEC_BUILD_CAP) -> Graph:
    return build(parse_spec(text), cap=cap)
