"""Immutable simple undirected graphs over dense 0-based vertex ids.

Vertices are the integers 0..n-1; edges are unordered pairs stored as
sorted tuples.  Graphs are value objects: every derived graph (induced
subgraph, vertex deletion, edge addition) is a new instance, which keeps
the theorem cross-checks free to compare many variants side by side.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph construction or out-of-range vertex reference."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple graph: no loops, no multi-edges, endpoints in [0, n)."""

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[Edge] = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            edge_set.add(normalize_edge(u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.edges: frozenset[Edge] = frozenset(edge_set)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        masks = []
        for s in adj:
            m = 0
            for w in s:
                m |= 1 << w
            masks.append(m)
        self._masks: tuple[int, ...] = tuple(masks)

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def adjacency_mask(self, v: int) -> int:
        """Neighborhood of v as a bit set (bit i set iff iv is an edge)."""
        self.check_vertex(v)
        return self._masks[v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def check_vertex_set(self, xs: Iterable[int]) -> frozenset[int]:
        xs = frozenset(xs)
        for v in xs:
            self.check_vertex(v)
        return xs

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        """A copy with edge uv added; uv must not already be present."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        return Graph(self.n, list(self.edges) + [(u, v)])

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- vertex/edge set algebra ----------------------------------------------


def induced_subgraph(g: Graph, xs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph spanned by xs, plus the old-id -> new-id relabeling map.

    New ids follow the ascending order of the old ids, so the map is the
    unique order-preserving bijection.
    """
    xs = g.check_vertex_set(xs)
    ordered = sorted(xs)
    relabel = {old: new for new, old in enumerate(ordered)}
    edges = [
        (relabel[u], relabel[v]) for (u, v) in g.edges if u in xs and v in xs
    ]
    return Graph(len(ordered), edges), relabel


def delete_vertices(g: Graph, ws: Iterable[int]) -> Graph:
    """The subgraph spanned by all vertices outside ws."""
    ws = g.check_vertex_set(ws)
    keep = [v for v in g.vertices() if v not in ws]
    sub, _ = induced_subgraph(g, keep)
    return sub


def neighborhood(g: Graph, xs: Iterable[int]) -> frozenset[int]:
    """Open neighborhood: all vertices adjacent to some member of xs."""
    xs = g.check_vertex_set(xs)
    out: set[int] = set()
    for v in xs:
        out.update(g.neighbors(v))
    return frozenset(out)


def cut_edges(g: Graph, a: Iterable[int], b: Iterable[int]) -> frozenset[Edge]:
    """Edges with one endpoint in a and the other in b; a and b disjoint."""
    a = g.check_vertex_set(a)
    b = g.check_vertex_set(b)
    overlap = a & b
    if overlap:
        raise GraphError(f"cut sides overlap on {sorted(overlap)}")
    return frozenset(
        e for e in g.edges if (e[0] in a and e[1] in b) or (e[0] in b and e[1] in a)
    )


def complement_non_edges(g: Graph) -> tuple[Edge, ...]:
    """All unordered pairs of distinct vertices that are not edges of g."""
    out = []
    for u in range(g.n):
        mask = g.adjacency_mask(u)
        for v in range(u + 1, g.n):
            if not (mask >> v & 1):
                out.append((u, v))
    return tuple(out)


def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-coloring as (side0, side1), or None if an odd cycle exists.

    Each component's smallest vertex goes to side0, so the result is
    deterministic (and unique for connected graphs).
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = frozenset(v for v in g.vertices() if color[v] == 0)
    side1 = frozenset(v for v in g.vertices() if color[v] == 1)
    return side0, side1


def pendant_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices of degree exactly one, ascending."""
    return tuple(v for v in g.vertices() if g.degree(v) == 1)
