"""Exact minimum hitting set by branch and bound.

Sets are integer bitmasks over edge indices. The search branches on the
lowest edge of a smallest unhit set (include first, then exclude) and prunes
with a greedy packing of pairwise-disjoint unhit sets.
"""

from __future__ import annotations

from typing import Iterable

from ._kernels import backend_for
from .graph import bits


def reduce_constraints(sets: Iterable[int]) -> list[int]:
    """Deduplicate, drop supersets of other sets, sort by (size, members).

    Hitting every kept set hits every dropped one, so the family of hitting
    sets is unchanged.
    """
    uniq = sorted(set(sets), key=lambda x: (x.bit_count(), bits(x)))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _kernel(constraints: list[int], backend: str | None):
    top = max((c.bit_length() for c in constraints), default=0)
    return backend_for(0, top, backend)


def min_hitting_set(
    sets: Iterable[int], incumbent: int | None = None, backend: str | None = None
) -> int:
    """Lexicographically smallest minimum hitting set, as a mask.

    Lexicographic means comparing sorted member tuples. ``incumbent`` is any
    known hitting set; it seeds the upper bound. Raises ``ValueError`` if some
    set is empty.
    """
    cons = reduce_constraints(sets)
    if not cons:
        return 0
    if cons[0] == 0:
        raise ValueError("an empty set cannot be hit")
    k = _kernel(cons, backend)
    if incumbent is not None:
        if any(not (c & incumbent) for c in cons):
            raise ValueError("incumbent does not hit every set")
        better = k.min_hitting_set(cons, incumbent.bit_count())
        best = int(better) if better is not None else incumbent
    else:
        best = int(k.min_hitting_set(cons, sum(1 for _ in cons) + 1))
    return lex_smallest(cons, best, k)


def lex_smallest(cons: list[int], witness: int, k=None) -> int:
    """Turn one optimal hitting set into the lexicographically smallest optimal one.

    Walks the edges in index order and keeps each edge that still admits a
    hitting set of the optimal size.
    """
    if k is None:
        k = _kernel(cons, None)
    size = witness.bit_count()
    universe = 0
    for c in cons:
        universe |= c
    chosen = 0
    forbidden = 0
    for e in bits(universe):
        if all(c & chosen for c in cons):
            break
        bit = 1 << e
        if witness & bit:
            chosen |= bit
            continue
        trial = chosen | bit
        rest = [c for c in cons if not c & trial]
        budget = size - trial.bit_count()
        if budget < 0:
            forbidden |= bit
            continue
        got = k.feasible_hitting_set(rest, forbidden, budget) if rest else 0
        if got is None:
            forbidden |= bit
        else:
            chosen = trial
            witness = trial | int(got)
    assert all(c & chosen for c in cons) and chosen.bit_count() == size
    return chosen


def is_hitting_set(sets: Iterable[int], s: int) -> bool:
    return all(c & s for c in sets)
