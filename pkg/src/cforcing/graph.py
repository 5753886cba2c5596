"""Immutable simple undirected graphs with dense vertex and edge indices.

Vertex sets and edge sets are passed around as ``frozenset[int]`` at the
public surface; hot paths convert them to integer bitmasks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    pass


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    Edges are stored as ``(u, v)`` with ``u < v``; edge ``i`` keeps its index
    for the lifetime of the object. ``adj[v]`` lists ``(neighbor, edge_index)``
    pairs sorted by neighbor.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)
    _edge_index: dict = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"duplicate edge {key}")
            index[key] = len(norm)
            nbrs[u].append((v, len(norm)))
            nbrs[v].append((u, len(norm)))
            norm.append(key)
        adj = tuple(tuple(sorted(row)) for row in nbrs)
        return cls(n, tuple(norm), adj, index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises ``KeyError`` when absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def neighbors(self, v: int) -> list[int]:
        return [u for u, _ in self.adj[v]]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def incident(self, v: int) -> list[int]:
        return [e for _, e in self.adj[v]]

    def vertex_masks(self) -> list[int]:
        """Per-edge bitmask of its two endpoints."""
        return [(1 << u) | (1 << v) for u, v in self.edges]

    def edge_label(self, e: int, names: Sequence[str] | None = None) -> str:
        u, v = self.edges[e]
        if names is None:
            return f"{u}-{v}"
        return f"{names[u]}{names[v]}"


# ---------------------------------------------------------------- text format


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format.

    Blank lines and lines starting with ``#`` are ignored. Edge indices follow
    line order.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("malformed header, expected 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("malformed header, expected integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("malformed header, negative size", lineno)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise ParseError("malformed edge line, expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("malformed edge line, expected integers", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- degrees


def degree_stats(g: Graph) -> tuple[list[int], int, int]:
    """Return ``(degrees, max_degree, min_degree)``; both extremes are 0 on n=0."""
    deg = [len(row) for row in g.adj]
    if not deg:
        return deg, 0, 0
    return deg, max(deg), min(deg)


def two_degree(g: Graph, v: int) -> int:
    """Sum of the degrees of the neighbors of ``v``."""
    return sum(len(g.adj[u]) for u, _ in g.adj[v])


def avg_two_degree(g: Graph, v: int) -> Fraction:
    d = len(g.adj[v])
    if d == 0:
        return Fraction(0)
    return Fraction(two_degree(g, v), d)


def boundary(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Edges with exactly one endpoint in the vertex set ``s``."""
    inside = set(s)
    return frozenset(
        e for e, (u, v) in enumerate(g.edges) if (u in inside) != (v in inside)
    )


def induced_delete(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int], list[int]]:
    """Delete the vertices in ``removed``.

    Returns ``(h, vertex_map, edge_map)`` where ``vertex_map[i]`` and
    ``edge_map[j]`` give the original index of vertex ``i`` / edge ``j`` of ``h``.
    """
    gone = set(removed)
    vertex_map = [v for v in range(g.n) if v not in gone]
    new_index = {v: i for i, v in enumerate(vertex_map)}
    new_edges = []
    edge_map = []
    for e, (u, v) in enumerate(g.edges):
        if u in new_index and v in new_index:
            new_edges.append((new_index[u], new_index[v]))
            edge_map.append(e)
    return Graph.from_edges(len(vertex_map), new_edges), vertex_map, edge_map


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def connectivity(g: Graph) -> tuple[bool, int]:
    """``(is_connected, component_count)``; the empty graph counts as connected."""
    omega = len(components(g))
    return omega <= 1, omega


def cyclomatic(g: Graph) -> int:
    return g.m - g.n + connectivity(g)[1]


def require_connected(g: Graph) -> None:
    connected, omega = connectivity(g)
    if not connected:
        raise DisconnectedGraphError(f"graph has {omega} components, expected a connected graph")


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, _ in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Min-degree peeling.

    Repeatedly removes a vertex of minimum current degree (lowest index on
    ties). Returns the degeneracy and the removal order.
    """
    deg = [len(row) for row in g.adj]
    alive = [True] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        alive[v] = False
        order.append(v)
        for u, _ in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
    return d, order


def check_ordering(order: Sequence[int], n: int) -> list[int]:
    order = list(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"ordering is not a permutation of 0..{n - 1}")
    return order
