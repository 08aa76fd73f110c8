"""Simple undirected graphs with canonical edge ids and edge-distance queries.

A Graph is immutable after construction: every operation here is a pure
query, so graphs can be shared freely between concurrent runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class SelfLoopError(ValueError):
    pass


class DuplicateEdgeError(ValueError):
    pass


class VertexOutOfRangeError(ValueError):
    pass


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Edges are canonicalized as (min, max) pairs and get stable ids
    0..m-1 in input order.  `adjacency[v]` is the sorted list of
    neighbors of v, and `incident[v]` the matching list of edge ids.
    """

    __slots__ = ("n", "edges", "adjacency", "incident", "edge_index")

    def __init__(self, n: int, edges: list[tuple[int, int]],
                 adjacency: list[list[int]], incident: list[list[int]],
                 edge_index: dict[tuple[int, int], int]):
        self.n = n
        self.edges = edges
        self.adjacency = adjacency
        self.incident = incident
        self.edge_index = edge_index

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index or (v, u) in self.edge_index

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency[v]

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of {u, v}; KeyError if absent."""
        if u > v:
            u, v = v, u
        return self.edge_index[(u, v)]

    def neighbor_edges(self, v: int):
        """Pairs (neighbor, edge id) around v, sorted by neighbor id."""
        return zip(self.adjacency[v], self.incident[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_pairs: list[tuple[int, int]]) -> Graph:
    """Validate and build a Graph from an edge list.

    Rejects self-loops, duplicate edges (in either orientation), and
    endpoints outside [0, n).
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int]] = []
    edge_index: dict[tuple[int, int], int] = {}
    adjacency: list[list[int]] = [[] for _ in range(n)]
    incident: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_pairs:
        if not (0 <= u < n):
            raise VertexOutOfRangeError(f"vertex {u} not in [0, {n})")
        if not (0 <= v < n):
            raise VertexOutOfRangeError(f"vertex {v} not in [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in edge_index:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        eid = len(edges)
        edge_index[(u, v)] = eid
        edges.append((u, v))
        adjacency[u].append(v)
        adjacency[v].append(u)
        incident[u].append(eid)
        incident[v].append(eid)
    for v in range(n):
        if len(adjacency[v]) > 1:
            order = sorted(range(len(adjacency[v])), key=adjacency[v].__getitem__)
            adjacency[v] = [adjacency[v][i] for i in order]
            incident[v] = [incident[v][i] for i in order]
    return Graph(n, edges, adjacency, incident, edge_index)


def max_degree(g: Graph) -> int:
    return max((len(nbrs) for nbrs in g.adjacency), default=0)


@dataclass(frozen=True)
class DegreeClass:
    """Degree test against a threshold k: exactly k, at most k ("k-"),
    or at least k ("k+")."""

    kind: str  # "exact" | "at_most" | "at_least"
    threshold: int

    def __post_init__(self):
        if self.kind not in ("exact", "at_most", "at_least"):
            raise ValueError(f"unknown degree-class kind {self.kind!r}")

    def matches(self, degree: int) -> bool:
        if self.kind == "exact":
            return degree == self.threshold
        if self.kind == "at_most":
            return degree <= self.threshold
        return degree >= self.threshold

    def vertices(self, g: Graph) -> list[int]:
        return [v for v in range(g.n) if self.matches(len(g.adjacency[v]))]


def degeneracy_peel_order(g: Graph) -> list[int] | None:
    """Order in which vertices can be peeled, removing degree <= 2 first.

    Returns None when peeling gets stuck, i.e. some subgraph has minimum
    degree >= 3.  Each prefix removal happens at degree <= 2 in the graph
    that remains at that moment.
    """
    deg = g.degrees()
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 2)
    order: list[int] = []
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        order.append(v)
        for x in g.adjacency[v]:
            if not removed[x]:
                deg[x] -= 1
                if deg[x] == 2:
                    queue.append(x)
    if len(order) != g.n:
        return None
    return order


def is_two_degenerate(g: Graph) -> bool:
    """True iff every subgraph has a vertex of degree at most 2."""
    return degeneracy_peel_order(g) is not None


def edges_within_distance_one(g: Graph, e: int) -> set[int]:
    """All edges f != e that cannot share e's color in a strong coloring.

    These are the edges meeting an endpoint of e or meeting a neighbor of
    an endpoint of e.
    """
    x, y = g.edges[e]
    zone = {x, y}
    zone.update(g.adjacency[x])
    zone.update(g.adjacency[y])
    out: set[int] = set()
    for z in zone:
        out.update(g.incident[z])
    out.discard(e)
    return out


def square_of_line_graph(g: Graph) -> Graph:
    """Conflict graph: one vertex per edge of g, adjacency = within distance 1.

    A proper vertex coloring of this graph is exactly a strong edge-coloring
    of g.
    """
    pairs: list[tuple[int, int]] = []
    for e in range(g.m):
        for f in edges_within_distance_one(g, e):
            if e < f:
                pairs.append((e, f))
    pairs.sort()
    return build_graph(g.m, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line as "u v" (0-based); lines starting with '#' are
    ignored.  An optional first line "n m" is treated as a header when it
    is consistent with the rest of the file (m data lines follow and all
    endpoints are below n); otherwise it is read as an edge.  Without a
    header, n is inferred as max endpoint + 1.
    """
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}") from None
        rows.append((a, b))
    if rows:
        hn, hm = rows[0]
        body = rows[1:]
        if hn >= 0 and hm == len(body) and all(0 <= u < hn and 0 <= v < hn for u, v in body):
            return build_graph(hn, body)
    n = max((max(u, v) for u, v in rows), default=-1) + 1
    return build_graph(n, rows)


def format_edge_list(g: Graph) -> str:
    """Serialize a Graph to the edge-list text format, header included."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
