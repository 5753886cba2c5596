"""Standard graph families with documented vertex numbering.

Products and hypercubes list their edges in lexicographic order of
``(min endpoint, max endpoint)``; the simple families list them in the order
given in each docstring.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError


def _need(value: int, minimum: int, what: str) -> None:
    if value < minimum:
        raise GraphError(f"{what} must be >= {minimum}, got {value}")


def gen_path(n: int) -> Graph:
    """Path ``0-1-...-(n-1)``; edge ``i`` joins ``i`` and ``i+1``."""
    _need(n, 1, "path order")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """Cycle on ``0..n-1``; edge ``i`` joins ``i`` and ``(i+1) % n``."""
    _need(n, 3, "cycle order")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _need(n, 1, "complete graph order")
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts are numbered consecutively: part 0 gets ``0..parts[0]-1`` and so on."""
    if not parts:
        raise GraphError("need at least one part")
    for p in parts:
        _need(p, 1, "part size")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    )


def gen_wheel(n: int) -> Graph:
    """Wheel on ``n`` vertices: hub ``0`` joined to the rim cycle ``1..n-1``.

    Spokes come first, then the rim edges in cycle order.
    """
    _need(n, 4, "wheel order")
    rim = n - 1
    spokes = [(0, i) for i in range(1, n)]
    ring = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, spokes + ring)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(u, v)`` becomes ``u * h.n + v``."""
    nh = h.n
    edges = []
    for u in range(g.n):
        for a, b in h.edges:
            edges.append((u * nh + a, u * nh + b))
    for x, y in g.edges:
        for v in range(nh):
            edges.append((x * nh + v, y * nh + v))
    edges.sort()
    return Graph.from_edges(g.n * nh, edges)


def gen_hypercube(n: int) -> Graph:
    """``K2`` to the n-th Cartesian power; vertex labels are the binary words."""
    _need(n, 1, "hypercube dimension")
    k2 = gen_path(2)
    g = k2
    for _ in range(n - 1):
        g = cartesian_product(g, k2)
    return g


def gen_grid(rows: int, cols: int) -> Graph:
    return cartesian_product(gen_path(rows), gen_path(cols))


def gen_torus(n: int, k: int) -> Graph:
    """k-th Cartesian power of the n-cycle."""
    _need(k, 1, "power")
    c = gen_cycle(n)
    g = c
    for _ in range(k - 1):
        g = cartesian_product(g, c)
    return g


def gen_disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])
