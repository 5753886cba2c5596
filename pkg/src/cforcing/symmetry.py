"""Graph automorphisms by backtracking, and the induced edge orbits."""

from __future__ import annotations

from collections import deque

from .errors import CapExceeded, GuardExceeded
from .graph import Graph

DEFAULT_VERTEX_GUARD = 20
DEFAULT_AUT_CAP = 100_000


def _search_order(g: Graph) -> list[int]:
    # BFS per component so every vertex after a component root has a mapped neighbor
    seen = [False] * g.n
    order = []
    for s in sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y, _ in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def automorphisms(
    g: Graph, cap: int = DEFAULT_AUT_CAP, guard: int = DEFAULT_VERTEX_GUARD
) -> list[tuple[int, ...]]:
    """All automorphisms as tuples ``p`` with ``p[v]`` the image of ``v``, sorted."""
    if g.n > guard:
        raise GuardExceeded(f"automorphism search limited to n <= {guard}, got n={g.n}")
    nb = [set(g.neighbors(v)) for v in range(g.n)]
    deg = [len(row) for row in g.adj]
    inv = [(deg[v], tuple(sorted(deg[u] for u in nb[v]))) for v in range(g.n)]
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # earliest-placed neighbor of each vertex, if placed before it
    anchor = []
    for i, v in enumerate(order):
        placed = [u for u in nb[v] if pos[u] < i]
        anchor.append(min(placed, key=pos.__getitem__) if placed else None)
    image = [-1] * g.n
    used = [False] * g.n
    found: list[tuple[int, ...]] = []

    def rec(i: int) -> None:
        if i == g.n:
            found.append(tuple(image))
            if len(found) > cap:
                raise CapExceeded("automorphism count", cap)
            return
        v = order[i]
        a = anchor[i]
        cands = sorted(nb[image[a]]) if a is not None else range(g.n)
        for w in cands:
            if used[w] or inv[w] != inv[v]:
                continue
            ok = True
            for x in order[:i]:
                if (x in nb[v]) != (image[x] in nb[w]):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            rec(i + 1)
            used[w] = False
            image[v] = -1

    rec(0)
    found.sort()
    return found


def edge_orbits(g: Graph, auts: list[tuple[int, ...]] | None = None, **kw) -> list[list[int]]:
    """Partition of edge indices into orbits, each sorted, ordered by least member."""
    if auts is None:
        auts = automorphisms(g, **kw)
    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in auts:
        for e, (u, v) in enumerate(g.edges):
            a, b = find(e), find(g.edge_id(p[u], p[v]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for e in range(g.m):
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values())


def is_edge_transitive(g: Graph, **kw) -> bool:
    return len(edge_orbits(g, **kw)) <= 1


def is_automorphism(g: Graph, p) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)
