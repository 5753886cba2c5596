"""Pure-Python kernels over integer bitmasks (no size limit).

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and results; the compiled one only accepts graphs with at most 64 vertices
and 64 edges.
"""

from __future__ import annotations

BACKEND = "python"


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def enumerate_pms(n, inc_by_edge, cap):
    """All perfect matchings as edge masks, or ``None`` if there are more than ``cap``.

    ``inc_by_edge[v]`` lists ``(neighbor, edge)`` sorted by edge index. The
    search always matches the lowest uncovered vertex first.
    """
    if n % 2:
        return []
    out = []
    full = (1 << n) - 1

    def rec(remaining, chosen):
        if not remaining:
            out.append(chosen)
            return len(out) <= cap
        v = _low(remaining)
        rest = remaining & ~(1 << v)
        for u, e in inc_by_edge[v]:
            if rest >> u & 1:
                if not rec(rest & ~(1 << u), chosen | (1 << e)):
                    return False
        return True

    if not rec(full, 0):
        return None
    return out


def count_pms(n, inc_by_edge, covered, cap):
    """Number of perfect matchings of the graph minus ``covered``, saturating at ``cap``."""
    remaining0 = ((1 << n) - 1) & ~covered
    if remaining0.bit_count() % 2:
        return 0
    count = 0

    def rec(remaining):
        nonlocal count
        if not remaining:
            count += 1
            return count < cap
        v = _low(remaining)
        rest = remaining & ~(1 << v)
        for u, _ in inc_by_edge[v]:
            if rest >> u & 1:
                if not rec(rest & ~(1 << u)):
                    return False
        return True

    rec(remaining0)
    return count


def cycle_components(x, edge_ends, inc):
    """Split an edge mask whose vertices all have degree 2 into its cycles.

    ``edge_ends[e]`` is ``(u, v)``; ``inc[v]`` is the incident-edge mask of ``v``.
    Cycles come out ordered by their lowest edge.
    """
    out = []
    while x:
        e0 = _low(x)
        start, v = edge_ends[e0]
        comp = 1 << e0
        e = e0
        while v != start:
            nxt = x & inc[v] & ~(1 << e)
            e = _low(nxt)
            comp |= 1 << e
            a, b = edge_ends[e]
            v = b if a == v else a
        out.append(comp)
        x &= ~comp
    return out


def nice_cycle_masks(pms, edge_ends, inc):
    """Distinct cycles occurring in ``pms[i] ^ pms[j]`` over all pairs."""
    found = set()
    k = len(pms)
    for i in range(k):
        a = pms[i]
        for j in range(i + 1, k):
            found.update(cycle_components(a ^ pms[j], edge_ends, inc))
    return found


def _pick(constraints, chosen, forbidden):
    """Smallest unhit constraint restricted to allowed edges, plus a packing bound.

    Returns ``(branch_set, lower_bound)``; ``branch_set`` is ``0`` when every
    constraint is hit and ``-1`` when some constraint can no longer be hit.
    """
    best = 0
    best_size = 0
    allowed = ~forbidden
    used = 0
    packed = 0
    for c in constraints:
        if c & chosen:
            continue
        r = c & allowed
        if not r:
            return -1, 0
        s = r.bit_count()
        if not best or s < best_size:
            best, best_size = r, s
        if not r & used:
            used |= r
            packed += 1
    return best, packed


def min_hitting_set(constraints, limit):
    """Smallest hitting set of size < ``limit``; ``None`` if none exists.

    Constraints should be sorted by size so the packing bound sees small
    sets first.
    """
    best = [None, limit]

    def rec(chosen, size, forbidden):
        r, lb = _pick(constraints, chosen, forbidden)
        if r < 0:
            return
        if r == 0:
            best[0], best[1] = chosen, size
            return
        if size + max(lb, 1) >= best[1]:
            return
        bit = r & -r
        rec(chosen | bit, size + 1, forbidden)
        rec(chosen, size, forbidden | bit)

    rec(0, 0, 0)
    return best[0]


def feasible_hitting_set(constraints, forbidden, budget):
    """Any hitting set of size <= ``budget`` avoiding ``forbidden``; ``None`` otherwise."""

    def rec(chosen, size, forb):
        r, lb = _pick(constraints, chosen, forb)
        if r < 0:
            return None
        if r == 0:
            return chosen
        if size + max(lb, 1) > budget:
            return None
        bit = r & -r
        got = rec(chosen | bit, size + 1, forb)
        if got is not None:
            return got
        return rec(chosen, size, forb | bit)

    return rec(0, 0, forbidden)
