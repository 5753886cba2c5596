"""Complete forcing sets: two independent verifiers and the exact solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._kernels import backend_for
from .construction import ConstructionTrace, best_construction
from .errors import CapExceeded, NoPerfectMatching
from .graph import Graph, bits, mask_of
from .hitting import min_hitting_set
from .matchings import (
    DEFAULT_CYCLE_CAP,
    DEFAULT_PM_CAP,
    _cycle_from_mask,
    _tables,
    nice_cycle_masks,
    perfect_matching_masks,
)

EXACT = "exact"
UPPER_BOUND = "constructed-upper-bound"


@dataclass(frozen=True)
class CfResult:
    value: int
    optimal_set: frozenset[int]
    method: str
    constraints_used: int
    strategy: str = ""

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "set": sorted(self.optimal_set),
            "method": self.method,
            "constraints_used": self.constraints_used,
            "strategy": self.strategy,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CfResult":
        return cls(
            data["value"],
            frozenset(data["set"]),
            data["method"],
            data["constraints_used"],
            data.get("strategy", ""),
        )


def is_complete_forcing_set_definitional(
    g: Graph, s: Iterable[int], cap: int = DEFAULT_PM_CAP
) -> bool:
    """For every perfect matching M, ``S ∩ M`` lies in no other perfect matching."""
    sm = mask_of(s)
    pms = perfect_matching_masks(g, cap)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    inc_by_edge, _ = _tables(g)
    k = backend_for(g.n, g.m)
    vm = g.vertex_masks()
    for p in pms:
        covered = 0
        for e in bits(sm & p):
            covered |= vm[e]
        if k.count_pms(g.n, inc_by_edge, covered, 2) != 1:
            return False
    return True


def frame_masks(
    g: Graph, pm_cap: int = DEFAULT_PM_CAP, cycle_cap: int = DEFAULT_CYCLE_CAP
) -> list[tuple[int, int]]:
    """``(frame_a, frame_b)`` masks of every nice cycle."""
    out = []
    for c in nice_cycle_masks(g, pm_cap, cycle_cap):
        nc = _cycle_from_mask(g, c)
        out.append((mask_of(nc.frame_a), mask_of(nc.frame_b)))
    return out


def is_complete_forcing_set_frames(
    g: Graph, s: Iterable[int], cap: int = DEFAULT_CYCLE_CAP, pm_cap: int = DEFAULT_PM_CAP
) -> bool:
    """``S`` meets both frames of every nice cycle."""
    sm = mask_of(s)
    return all(sm & fa and sm & fb for fa, fb in frame_masks(g, pm_cap, cap))


def exact_cf(
    g: Graph, pm_cap: int = DEFAULT_PM_CAP, cycle_cap: int = DEFAULT_CYCLE_CAP
) -> CfResult:
    """Smallest complete forcing set as a minimum hitting set of nice-cycle frames.

    Seeded with the best construction. If an enumeration cap trips, the
    construction is returned with ``method == "constructed-upper-bound"``.
    Raises :class:`NoPerfectMatching` when there is nothing to force.
    """
    trace, label = best_construction(g)
    try:
        frames = frame_masks(g, pm_cap, cycle_cap)
    except CapExceeded:
        return CfResult(len(trace.s), trace.s, UPPER_BOUND, 0, label)
    distinct = {f for pair in frames for f in pair}
    best = min_hitting_set(distinct, incumbent=mask_of(trace.s))
    result = frozenset(bits(best))
    if not is_complete_forcing_set_definitional(g, result, pm_cap):  # pragma: no cover
        raise AssertionError("solver output failed definitional verification")
    return CfResult(len(result), result, EXACT, len(distinct), label)


def upper_bound_trace(g: Graph) -> tuple[ConstructionTrace, str]:
    return best_construction(g)
