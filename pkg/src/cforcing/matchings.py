"""Perfect matchings, symmetric differences and nice cycles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ._kernels import backend_for
from .errors import CapExceeded, NoPerfectMatching
from .graph import Graph, bits, mask_of

DEFAULT_PM_CAP = 10**6
DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class Matching:
    edges: frozenset[int]

    def is_perfect(self, g: Graph) -> bool:
        return is_matching(g, self.edges) and 2 * len(self.edges) == g.n

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    def to_dict(self) -> dict:
        return {"edges": sorted(self.edges)}

    @classmethod
    def from_dict(cls, data: dict) -> "Matching":
        return cls(frozenset(data["edges"]))


@dataclass(frozen=True)
class NiceCycle:
    """An even cycle with its two alternating halves.

    ``frame_a`` is the half holding the lowest-indexed cycle edge. ``vertices``
    starts at the lowest vertex and continues towards its smaller cycle
    neighbor.
    """

    vertices: tuple[int, ...]
    frame_a: frozenset[int]
    frame_b: frozenset[int]

    @property
    def edges(self) -> frozenset[int]:
        return self.frame_a | self.frame_b

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    def frames(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.frame_a, self.frame_b

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": sorted(self.edges),
            "frame_a": sorted(self.frame_a),
            "frame_b": sorted(self.frame_b),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NiceCycle":
        return cls(tuple(data["vertices"]), frozenset(data["frame_a"]), frozenset(data["frame_b"]))


@lru_cache(maxsize=128)
def _tables(g: Graph):
    inc_by_edge = tuple(tuple(sorted(row, key=lambda p: p[1])) for row in g.adj)
    inc = tuple(mask_of(e for _, e in row) for row in g.adj)
    return inc_by_edge, inc


def is_matching(g: Graph, edges: Iterable[int]) -> bool:
    covered = 0
    for e in edges:
        u, v = g.edges[e]
        both = (1 << u) | (1 << v)
        if covered & both:
            return False
        covered |= both
    return True


def _require_perfect(g: Graph, m: Matching | Iterable[int], what: str = "matching") -> Matching:
    if not isinstance(m, Matching):
        m = Matching(frozenset(m))
    if not m.is_perfect(g):
        raise ValueError(f"{what} is not a perfect matching of the graph")
    return m


def perfect_matching_masks(g: Graph, cap: int = DEFAULT_PM_CAP, backend: str | None = None) -> list[int]:
    """Edge masks of all perfect matchings, in canonical order."""
    if g.n % 2:
        return []
    inc_by_edge, _ = _tables(g)
    k = backend_for(g.n, g.m, backend)
    masks = k.enumerate_pms(g.n, inc_by_edge, cap)
    if masks is None:
        raise CapExceeded("perfect matching count", cap)
    masks = [int(x) for x in masks]
    masks.sort(key=bits)
    return masks


def enumerate_perfect_matchings(
    g: Graph, cap: int = DEFAULT_PM_CAP, backend: str | None = None
) -> list[Matching]:
    """Every perfect matching once, ordered by its sorted edge-index tuple.

    Raises :class:`CapExceeded` when there are more than ``cap`` of them.
    """
    return [Matching(frozenset(bits(x))) for x in perfect_matching_masks(g, cap, backend)]


def count_pms_containing(
    g: Graph, s: Iterable[int], cap: int = DEFAULT_PM_CAP, backend: str | None = None
) -> int:
    """Number of perfect matchings that contain every edge of ``s``, saturating at ``cap``.

    Returns 0 when ``s`` itself is not a matching.
    """
    s = list(s)
    if not is_matching(g, s):
        return 0
    covered = 0
    for e in s:
        u, v = g.edges[e]
        covered |= (1 << u) | (1 << v)
    inc_by_edge, _ = _tables(g)
    k = backend_for(g.n, g.m, backend)
    return int(k.count_pms(g.n, inc_by_edge, covered, cap))


def has_perfect_matching(g: Graph) -> bool:
    return count_pms_containing(g, (), cap=1) >= 1


def _cycle_from_mask(g: Graph, mask: int) -> NiceCycle:
    """Build the canonical NiceCycle for an edge mask that forms one even cycle."""
    edges = bits(mask)
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        u, v = g.edges[e]
        nbrs.setdefault(u, []).append((v, e))
        nbrs.setdefault(v, []).append((u, e))
    start = min(nbrs)
    (a, ea), (b, eb) = sorted(nbrs[start])
    seq = [start]
    frame_of = {ea: 0}
    prev, cur, side = start, a, 0
    while cur != start:
        seq.append(cur)
        (x, ex), (y, ey) = nbrs[cur]
        nxt, e = (y, ey) if x == prev else (x, ex)
        side ^= 1
        frame_of[e] = side
        prev, cur = cur, nxt
    low = min(edges)
    fa = frozenset(e for e in edges if frame_of[e] == frame_of[low])
    fb = frozenset(edges) - fa
    return NiceCycle(tuple(seq), fa, fb)


def symmetric_difference_cycles(g: Graph, m1, m2) -> list[NiceCycle]:
    """Decompose ``m1 Δ m2`` into its cycles, with frames oriented by ``m1``.

    ``frame_a`` of each returned cycle is ``C ∩ m1`` here (not the canonical
    orientation) since the caller cares which matching each half came from.
    """
    m1 = _require_perfect(g, m1, "first matching")
    m2 = _require_perfect(g, m2, "second matching")
    _, inc = _tables(g)
    x = mask_of(m1.edges) ^ mask_of(m2.edges)
    k = backend_for(g.n, g.m)
    out = []
    for comp in k.cycle_components(x, g.edges, inc):
        c = _cycle_from_mask(g, int(comp))
        cyc = c.edges
        out.append(NiceCycle(c.vertices, cyc & m1.edges, cyc & m2.edges))
    return out


def nice_cycle_masks(
    g: Graph, pm_cap: int = DEFAULT_PM_CAP, cycle_cap: int = DEFAULT_CYCLE_CAP, backend: str | None = None
) -> list[int]:
    pms = perfect_matching_masks(g, pm_cap, backend)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    _, inc = _tables(g)
    k = backend_for(g.n, g.m, backend)
    found = k.nice_cycle_masks(pms, g.edges, inc)
    if len(found) > cycle_cap:
        raise CapExceeded("nice cycle count", cycle_cap)
    return sorted((int(x) for x in found), key=bits)


def enumerate_nice_cycles(
    g: Graph, cap: int = DEFAULT_CYCLE_CAP, pm_cap: int = DEFAULT_PM_CAP, backend: str | None = None
) -> list[NiceCycle]:
    """Every nice cycle once, as the cycles of ``M1 Δ M2`` over all PM pairs.

    Sorted by the cycle's sorted edge-index tuple.
    """
    return [_cycle_from_mask(g, x) for x in nice_cycle_masks(g, pm_cap, cap, backend)]


def cycle_edges(g: Graph, seq: Sequence[int]) -> list[int]:
    """Edge indices along a closed vertex sequence; ``ValueError`` unless it is a simple cycle."""
    seq = list(seq)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise ValueError("not a simple cycle: need at least 3 distinct vertices")
    out = []
    for i, u in enumerate(seq):
        v = seq[(i + 1) % len(seq)]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"not a cycle of the graph: {u} and {v} are not adjacent")
        out.append(g.edge_id(u, v))
    return out


def is_nice_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """Even cycle whose removal leaves a graph with a perfect matching."""
    edges = cycle_edges(g, seq)
    if len(edges) % 2:
        return False
    covered = 0
    for v in set(seq):
        covered |= 1 << v
    inc_by_edge, _ = _tables(g)
    k = backend_for(g.n, g.m)
    return int(k.count_pms(g.n, inc_by_edge, covered, 1)) >= 1
