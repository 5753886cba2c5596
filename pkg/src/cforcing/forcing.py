"""Forcing sets of a perfect matching, f(M) and F(G)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._kernels import backend_for
from .errors import NoPerfectMatching
from .graph import Graph, bits, mask_of
from .hitting import min_hitting_set
from .matchings import (
    DEFAULT_PM_CAP,
    Matching,
    _require_perfect,
    _tables,
    count_pms_containing,
    perfect_matching_masks,
)


@dataclass(frozen=True)
class ForcingCertificate:
    matching: Matching
    forcing_set: frozenset[int]

    @property
    def number(self) -> int:
        return len(self.forcing_set)

    def to_dict(self) -> dict:
        return {
            "matching": sorted(self.matching.edges),
            "forcing_set": sorted(self.forcing_set),
            "number": self.number,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ForcingCertificate":
        cert = cls(Matching(frozenset(data["matching"])), frozenset(data["forcing_set"]))
        if cert.number != data["number"]:
            raise ValueError("certificate number does not match its forcing set")
        return cert


def is_forcing_set(g: Graph, m, s: Iterable[int]) -> bool:
    """True iff ``m`` is the only perfect matching containing ``s``."""
    m = _require_perfect(g, m)
    s = frozenset(s)
    if not s <= m.edges:
        raise ValueError("forcing set candidate is not a subset of the matching")
    return count_pms_containing(g, s, cap=2) == 1


def alternating_cycle_frames(g: Graph, mm: int, pms: list[int]) -> list[int]:
    """``M ∩ C`` for every M-alternating cycle C, one entry per (other PM, cycle)."""
    _, inc = _tables(g)
    k = backend_for(g.n, g.m)
    out = []
    for p in pms:
        if p == mm:
            continue
        for c in k.cycle_components(mm ^ p, g.edges, inc):
            out.append(int(c) & mm)
    return out


def _forcing_mask(g: Graph, mm: int, pms: list[int]) -> int:
    return min_hitting_set(alternating_cycle_frames(g, mm, pms))


def forcing_number(g: Graph, m, pm_cap: int = DEFAULT_PM_CAP) -> ForcingCertificate:
    """Minimum forcing set of ``m``: the smallest subset of ``m`` meeting every
    M-alternating cycle. Ties go to the lexicographically smallest edge set.
    """
    m = _require_perfect(g, m)
    pms = perfect_matching_masks(g, pm_cap)
    s = frozenset(bits(_forcing_mask(g, mask_of(m.edges), pms)))
    if not is_forcing_set(g, m, s):  # pragma: no cover - internal consistency
        raise AssertionError("hitting-set result is not forcing")
    return ForcingCertificate(m, s)


def max_forcing_number(g: Graph, pm_cap: int = DEFAULT_PM_CAP) -> tuple[int, ForcingCertificate]:
    """``F(G)`` and a matching attaining it (first one in canonical order on ties)."""
    pms = perfect_matching_masks(g, pm_cap)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    best: ForcingCertificate | None = None
    for p in pms:
        s = _forcing_mask(g, p, pms)
        if best is None or s.bit_count() > best.number:
            best = ForcingCertificate(Matching(frozenset(bits(p))), frozenset(bits(s)))
    return best.number, best


def all_forcing_numbers(g: Graph, pm_cap: int = DEFAULT_PM_CAP) -> list[ForcingCertificate]:
    pms = perfect_matching_masks(g, pm_cap)
    return [
        ForcingCertificate(Matching(frozenset(bits(p))), frozenset(bits(_forcing_mask(g, p, pms))))
        for p in pms
    ]
