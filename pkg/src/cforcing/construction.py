"""The greedy neighborhood-deletion construction of complete forcing sets,
and the vertex orderings that drive it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import GuardExceeded
from .graph import Graph, check_ordering, degeneracy, distances_from, require_connected

W_SET_LIMIT = 16


@dataclass(frozen=True)
class Step:
    vertex: int
    b_edges: frozenset[int]
    a_edges: frozenset[int]
    two_degree: int

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "b_edges": sorted(self.b_edges),
            "a_size": len(self.a_edges),
            "two_degree": self.two_degree,
        }


@dataclass(frozen=True)
class ConstructionTrace:
    """One run of the construction.

    Step ``i`` selects a vertex, moves its residual incident edges into ``b``
    (``b_edges``) and deletes its closed residual neighborhood. ``a_edges`` are
    the residual edges touching a neighbor of the selected vertex, and
    ``two_degree`` is its 2-degree in the residual graph.
    """

    ordering: tuple[int, ...]
    steps: tuple[Step, ...]
    b: frozenset[int]
    s: frozenset[int]

    @property
    def selected_vertices(self) -> list[int]:
        return [st.vertex for st in self.steps]

    def to_dict(self) -> dict:
        return {
            "ordering": list(self.ordering),
            "steps": [st.to_dict() for st in self.steps],
            "b": sorted(self.b),
            "s": sorted(self.s),
            "size": len(self.s),
        }


def algorithm_a(g: Graph, order: Sequence[int]) -> ConstructionTrace:
    """Run the construction on ``g`` with vertex priority ``order``.

    While vertices remain, the earliest surviving vertex of ``order`` is
    selected (isolated ones too, with an empty edge batch). Returns the full
    trace; ``trace.s`` is the complete forcing set ``E \\ B``.
    """
    order = check_ordering(order, g.n)
    require_connected(g)
    alive = [True] * g.n
    steps = []
    b: set[int] = set()
    pos = 0
    while True:
        while pos < g.n and not alive[order[pos]]:
            pos += 1
        if pos == g.n:
            break
        v = order[pos]
        nbrs = [(u, e) for u, e in g.adj[v] if alive[u]]
        b_i = frozenset(e for _, e in nbrs)
        a_i = set()
        t = 0
        for u, _ in nbrs:
            for w, e in g.adj[u]:
                if alive[w]:
                    a_i.add(e)
                    t += 1
        steps.append(Step(v, b_i, frozenset(a_i), t))
        b |= b_i
        alive[v] = False
        for u, _ in nbrs:
            alive[u] = False
    b_f = frozenset(b)
    return ConstructionTrace(tuple(order), tuple(steps), b_f, frozenset(range(g.m)) - b_f)


def order_given(order: Sequence[int], n: int | None = None) -> list[int]:
    order = list(order)
    return check_ordering(order, len(order) if n is None else n)


def order_identity(g: Graph) -> list[int]:
    return list(range(g.n))


def order_min_avg_two_degree(g: Graph) -> list[int]:
    """Repeatedly select the residual vertex of least average 2-degree.

    Averages are exact fractions; ties go to the lowest index. Deleted,
    never-selected vertices follow at the end in index order.
    """
    require_connected(g)
    alive = [True] * g.n
    deg = [len(row) for row in g.adj]
    selected = []
    while any(alive):
        best_v, best_avg = -1, None
        for v in range(g.n):
            if not alive[v]:
                continue
            if deg[v] == 0:
                avg = Fraction(0)
            else:
                avg = Fraction(sum(deg[u] for u, _ in g.adj[v] if alive[u]), deg[v])
            if best_avg is None or avg < best_avg:
                best_v, best_avg = v, avg
        selected.append(best_v)
        doomed = [best_v] + [u for u, _ in g.adj[best_v] if alive[u]]
        for x in doomed:
            alive[x] = False
        for x in doomed:
            for y, _ in g.adj[x]:
                if alive[y]:
                    deg[y] -= 1
    chosen = set(selected)
    return selected + [v for v in range(g.n) if v not in chosen]


def order_degeneracy(g: Graph) -> list[int]:
    """The min-degree peeling order."""
    require_connected(g)
    return degeneracy(g)[1]


@dataclass(frozen=True)
class WSet:
    vertices: tuple[int, ...]
    boundary: frozenset[int]
    complement: frozenset[int]


def best_w_set(g: Graph, limit: int = W_SET_LIMIT) -> WSet:
    """Exhaustive search for a vertex set with pairwise distances >= 3 and the
    largest boundary. Ties go to the lexicographically smallest vertex tuple.
    """
    if g.n > limit:
        raise GuardExceeded(f"exhaustive W-set search limited to n <= {limit}, got n={g.n}")
    near = [0] * g.n
    for v in range(g.n):
        for u, d in enumerate(distances_from(g, v)):
            if 0 <= d <= 2:
                near[v] |= 1 << u
    deg = [len(row) for row in g.adj]
    suffix = [0] * (g.n + 1)
    for v in range(g.n - 1, -1, -1):
        suffix[v] = suffix[v + 1] + deg[v]
    best = [(), -1]

    def rec(v: int, blocked: int, chosen: list[int], weight: int) -> None:
        if weight + suffix[v] <= best[1]:
            return
        if v == g.n:
            best[0], best[1] = tuple(chosen), weight
            return
        if not blocked >> v & 1:
            chosen.append(v)
            rec(v + 1, blocked | near[v], chosen, weight + deg[v])
            chosen.pop()
        rec(v + 1, blocked, chosen, weight)

    rec(0, 0, [], 0)
    w = best[0]
    bnd = frozenset(e for v in w for _, e in g.adj[v])
    return WSet(w, bnd, frozenset(range(g.m)) - bnd)


def order_w_set(g: Graph, limit: int = W_SET_LIMIT) -> list[int]:
    """Best W-set first (index order), then every other vertex in index order."""
    require_connected(g)
    w = best_w_set(g, limit).vertices
    ws = set(w)
    return list(w) + [v for v in range(g.n) if v not in ws]


STRATEGIES: dict[str, Callable[[Graph], list[int]]] = {
    "given": order_identity,
    "min-avg": order_min_avg_two_degree,
    "degeneracy": order_degeneracy,
    "w-set": order_w_set,
}


def best_construction(g: Graph, w_set_limit: int = W_SET_LIMIT) -> tuple[ConstructionTrace, str]:
    """Smallest construction over the built-in orderings (first strategy wins ties).

    The W-set strategy only takes part when ``g.n <= w_set_limit``.
    """
    best: tuple[ConstructionTrace, str] | None = None
    for label, strategy in STRATEGIES.items():
        if label == "w-set" and g.n > w_set_limit:
            continue
        trace = algorithm_a(g, strategy(g))
        if best is None or len(trace.s) < len(best[0].s):
            best = (trace, label)
    return best
