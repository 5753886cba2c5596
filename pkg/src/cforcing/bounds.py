"""Closed-form bounds on the complete forcing number, and a report that
collects them next to the exact value when that is affordable.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from .complete import exact_cf
from .errors import CapExceeded, GuardExceeded, NoPerfectMatching, NotApplicable
from .forcing import _forcing_mask, max_forcing_number
from .graph import Graph, bits, connectivity, cyclomatic, degeneracy, degree_stats, is_bipartite, mask_of
from .matchings import DEFAULT_PM_CAP, _require_perfect, perfect_matching_masks
from .spectral import DEFAULT_TOL, spectral_radius
from .symmetry import DEFAULT_AUT_CAP, DEFAULT_VERTEX_GUARD, is_edge_transitive

UPPER, LOWER, EXACT = "upper", "lower", "exact"
# slack for floor/ceil of float-valued bounds that land on an integer
ROUND_SLACK = 1e-9


@dataclass
class BoundEntry:
    name: str
    kind: str
    value: float | None
    applicable: bool
    reason: str = ""
    anchor: str = ""

    @property
    def rounded(self) -> int | None:
        """Floor of upper bounds, ceiling of lower bounds (clamped at 0)."""
        if not self.applicable or self.value is None:
            return None
        if self.kind == UPPER:
            return max(0, math.floor(self.value + ROUND_SLACK))
        if self.kind == LOWER:
            return max(0, math.ceil(self.value - ROUND_SLACK))
        return int(self.value)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["rounded"] = self.rounded
        return d


def _na(name: str, kind: str, reason: str, anchor: str) -> BoundEntry:
    return BoundEntry(name, kind, None, False, reason, anchor)


def _coef_bound(name: str, t: float, m: int, anchor: str) -> BoundEntry:
    if t <= 0:
        return _na(name, UPPER, "coefficient denominator is not positive", anchor)
    return BoundEntry(name, UPPER, (1.0 - 1.0 / t) * m, True, "", anchor)


# ------------------------------------------------------------------ upper bounds


def bound_trivial(g: Graph) -> BoundEntry:
    return BoundEntry("trivial", UPPER, float(g.m), True, "", "cf <= |E|")


def bound_spectral(g: Graph, rho: float | None = None) -> BoundEntry:
    anchor = "cf <= (1 - 1/rho) |E|"
    if g.m == 0:
        return _na("spectral", UPPER, "graph has no edges", anchor)
    if rho is None:
        rho = spectral_radius(g)
    return _coef_bound("spectral", rho, g.m, anchor)


def bound_sqrt_2m_n(g: Graph) -> BoundEntry:
    anchor = "rho <= sqrt(2m - n + 1) for connected graphs"
    if not connectivity(g)[0]:
        return _na("sqrt-2m-n+1", UPPER, "requires a connected graph", anchor)
    if g.m == 0:
        return _na("sqrt-2m-n+1", UPPER, "graph has no edges", anchor)
    return _coef_bound("sqrt-2m-n+1", math.sqrt(2 * g.m - g.n + 1), g.m, anchor)


def bound_max_degree(g: Graph) -> BoundEntry:
    delta = degree_stats(g)[1]
    return _coef_bound("max-degree", float(delta), g.m, "rho <= max degree")


def degeneracy_coefficient(d: int, delta: int) -> float:
    """``2 sqrt(d * delta) - d``: a vertex of average 2-degree at most this exists."""
    return 2.0 * math.sqrt(d * delta) - d


def bound_degeneracy(g: Graph) -> BoundEntry:
    anchor = "cf <= (1 - 1/(2 sqrt(d Delta) - d)) |E|"
    d = degeneracy(g)[0]
    delta = degree_stats(g)[1]
    if d == 0:
        return _na("degeneracy", UPPER, "graph has no edges", anchor)
    return _coef_bound("degeneracy", degeneracy_coefficient(d, delta), g.m, anchor)


def bound_deg_via_spectral(g: Graph) -> BoundEntry:
    anchor = "rho <= sqrt(4 d (Delta - d)) when Delta >= 2d"
    d = degeneracy(g)[0]
    delta = degree_stats(g)[1]
    if d == 0:
        return _na("degeneracy-spectral", UPPER, "graph has no edges", anchor)
    if delta < 2 * d:
        return _na("degeneracy-spectral", UPPER, "needs max degree >= 2 * degeneracy", anchor)
    return _coef_bound("degeneracy-spectral", math.sqrt(4 * d * (delta - d)), g.m, anchor)


def bound_planar_spectral(g: Graph, planar: bool = False) -> BoundEntry:
    anchor = "planar: rho <= sqrt(8 Delta - 16) + 2 sqrt(3)"
    if not planar:
        return _na("planar-spectral", UPPER, "planarity not asserted", anchor)
    delta = degree_stats(g)[1]
    if delta < 2:
        return _na("planar-spectral", UPPER, "needs max degree >= 2", anchor)
    return _coef_bound("planar-spectral", math.sqrt(8 * delta - 16) + 2 * math.sqrt(3), g.m, anchor)


def bound_planar_degeneracy(g: Graph, planar: bool = False) -> BoundEntry:
    anchor = "planar graphs are 5-degenerate"
    if not planar:
        return _na("planar-degeneracy", UPPER, "planarity not asserted", anchor)
    delta = degree_stats(g)[1]
    if delta < 5:
        return _na("planar-degeneracy", UPPER, "needs max degree >= 5", anchor)
    return _coef_bound("planar-degeneracy", degeneracy_coefficient(5, delta), g.m, anchor)


def bound_outerplanar(g: Graph, outerplanar: bool = False) -> BoundEntry:
    anchor = "outerplanar graphs are 2-degenerate"
    if not outerplanar:
        return _na("outerplanar", UPPER, "outerplanarity not asserted", anchor)
    delta = degree_stats(g)[1]
    if delta < 2:
        return _na("outerplanar", UPPER, "needs max degree >= 2", anchor)
    return _coef_bound("outerplanar", degeneracy_coefficient(2, delta), g.m, anchor)


def bound_cyclomatic(g: Graph) -> BoundEntry:
    return BoundEntry("cyclomatic", UPPER, float(2 * cyclomatic(g)), True, "", "cf <= 2 (m - n + components)")


def bound_e_minus_delta(g: Graph) -> BoundEntry:
    return BoundEntry("edges-minus-max-degree", UPPER, float(g.m - degree_stats(g)[1]), True, "", "cf <= |E| - Delta")


def tree_product_bound(tree_sizes: Sequence[int], max_degree: int) -> float:
    """Degeneracy bound for a Cartesian product of ``len(tree_sizes)`` trees."""
    k = len(tree_sizes)
    if k < 1 or any(s < 1 for s in tree_sizes):
        raise ValueError("need at least one tree, each with at least one vertex")
    if max_degree <= 0:
        raise ValueError("max degree must be positive")
    edges = 0
    for i, ni in enumerate(tree_sizes):
        prod = 1
        for j, nj in enumerate(tree_sizes):
            if j != i:
                prod *= nj
        edges += (ni - 1) * prod
    return (1.0 - 1.0 / degeneracy_coefficient(k, max_degree)) * edges


def degeneracy_route_violations(max_delta: int = 50) -> list[tuple[int, int]]:
    """Integer pairs ``1 <= d <= Delta <= max_delta`` where the spectral route
    via ``sqrt(4 d (Delta - d))`` beats the direct degeneracy coefficient.
    """
    bad = []
    for delta in range(1, max_delta + 1):
        for d in range(1, delta + 1):
            if degeneracy_coefficient(d, delta) > math.sqrt(4 * d * (delta - d)):
                bad.append((d, delta))
    return bad


# ------------------------------------------------------------------ lower bounds


def lower_bound_matching_family(g: Graph, matchings: Iterable, k: int, pm_cap: int = DEFAULT_PM_CAP) -> float:
    """``(1/k) * sum f(M_i)`` for perfect matchings no edge of which lies in more than ``k`` of them."""
    ms = [mask_of(_require_perfect(g, m).edges) for m in matchings]
    if k < 1:
        raise ValueError("k must be positive")
    mult = [0] * g.m
    for mm in ms:
        for e in bits(mm):
            mult[e] += 1
    if ms and max(mult) > k:
        raise ValueError(f"an edge lies in {max(mult)} matchings of the family, more than k={k}")
    pms = perfect_matching_masks(g, pm_cap)
    return sum(_forcing_mask(g, mm, pms).bit_count() for mm in ms) / k


def lower_bound_edge_transitive(g: Graph, pm_cap: int = DEFAULT_PM_CAP, **aut_kw) -> float:
    """``(2|E| / |V|) * F(G)`` for edge-transitive graphs."""
    if not is_edge_transitive(g, **aut_kw):
        raise NotApplicable("graph is not edge-transitive")
    big_f, _ = max_forcing_number(g, pm_cap)
    return 2 * g.m / g.n * big_f


def _log_ratio_factor(k: int) -> float:
    return 1.0 - math.log(2 * math.e) / math.log(k)


def lower_bound_regular_bipartite(n: int, k: int, clamp: bool = True) -> float:
    """Edge-transitive k-regular bipartite graph on n vertices."""
    if k < 2:
        raise ValueError("degree must be at least 2")
    if n < 2 or n % 2:
        raise ValueError("vertex count must be even and positive")
    raw = _log_ratio_factor(k) * n * k / 2
    return max(0.0, raw) if clamp else raw


def qn_bounds(n: int, clamp: bool = True) -> tuple[float, int]:
    """``(lower, upper)`` for the n-dimensional hypercube, ``n >= 4``."""
    if n < 4:
        raise ValueError("hypercube bounds need n >= 4")
    raw = _log_ratio_factor(n) * n * 2 ** (n - 1)
    upper = n * 2 ** (n - 1) - 5 * 2 ** (n - 3)
    return (max(0.0, raw) if clamp else raw), upper


def cnk_lower(n: int, k: int) -> float:
    """Lower bound for the k-th Cartesian power of the even n-cycle."""
    if n < 4 or n % 2:
        raise ValueError("n must be even and at least 4")
    if k < 1:
        raise ValueError("k must be at least 1")
    return k / 2 * n**k


# ------------------------------------------------------------------ report


@dataclass
class BoundReport:
    entries: list[BoundEntry] = field(default_factory=list)
    assumed_flags: dict = field(default_factory=dict)

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def applicable(self, kind: str) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.kind == kind]

    def to_dict(self) -> dict:
        return {"assumed_flags": dict(self.assumed_flags), "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        entries = []
        for d in data["entries"]:
            d = {k: v for k, v in d.items() if k != "rounded"}
            entries.append(BoundEntry(**d))
        return cls(entries, dict(data.get("assumed_flags", {})))

    def _rows(self) -> list[list[str]]:
        rows = []
        for e in self.entries:
            raw = "" if e.value is None else f"{e.value:.6f}"
            if raw == "-0.000000":
                raw = "0.000000"
            rounded = "" if e.rounded is None else str(e.rounded)
            app = "yes" if e.applicable else f"no ({e.reason})"
            rows.append([e.name, e.kind, raw, rounded, app, e.anchor])
        return rows

    HEADER = ["name", "kind", "raw", "rounded", "applicable", "anchor"]

    def to_markdown(self) -> str:
        lines = ["| " + " | ".join(self.HEADER) + " |", "|" + "---|" * len(self.HEADER)]
        for r in self._rows():
            lines.append("| " + " | ".join(c.replace("|", "\\|") for c in r) + " |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.HEADER)
        w.writerows(self._rows())
        return buf.getvalue()


def _guarded(name: str, kind: str, anchor: str, fn: Callable[[], float]) -> BoundEntry:
    try:
        return BoundEntry(name, kind, float(fn()), True, "", anchor)
    except NotApplicable as exc:
        return _na(name, kind, str(exc), anchor)
    except (CapExceeded, GuardExceeded) as exc:
        return _na(name, kind, f"not computed: {exc}", anchor)
    except NoPerfectMatching as exc:
        return _na(name, kind, str(exc), anchor)


def _family_bound(g: Graph, pm_cap: int) -> float:
    pms = perfect_matching_masks(g, pm_cap)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    mult = [0] * g.m
    for p in pms:
        for e in bits(p):
            mult[e] += 1
    k = max(mult)
    return sum(_forcing_mask(g, p, pms).bit_count() for p in pms) / k


def _regular_bipartite(g: Graph, aut_kw: dict) -> float:
    deg, delta, dmin = degree_stats(g)
    if delta != dmin or not is_bipartite(g):
        raise NotApplicable("graph is not regular bipartite")
    if delta < 2:
        raise NotApplicable("degree must be at least 2")
    if not is_edge_transitive(g, **aut_kw):
        raise NotApplicable("graph is not edge-transitive")
    return lower_bound_regular_bipartite(g.n, delta, clamp=False)


def full_report(
    g: Graph,
    planar: bool = False,
    outerplanar: bool = False,
    exact: bool = True,
    pm_cap: int = DEFAULT_PM_CAP,
    cycle_cap: int = DEFAULT_PM_CAP,
    aut_cap: int = DEFAULT_AUT_CAP,
    aut_guard: int = DEFAULT_VERTEX_GUARD,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """Every bound in a fixed order, inapplicable ones included with a reason.

    Negative lower-bound formulas keep their raw value; only ``rounded`` is
    clamped at 0.
    """
    aut_kw = {"cap": aut_cap, "guard": aut_guard}
    rho = spectral_radius(g, tol) if g.m else None
    entries = [
        bound_trivial(g),
        bound_spectral(g, rho),
        bound_sqrt_2m_n(g),
        bound_max_degree(g),
        bound_degeneracy(g),
        bound_deg_via_spectral(g),
        bound_planar_spectral(g, planar),
        bound_planar_degeneracy(g, planar),
        bound_outerplanar(g, outerplanar),
        bound_cyclomatic(g),
        bound_e_minus_delta(g),
        BoundEntry("trivial-lower", LOWER, 0.0, True, "", "cf >= 0"),
        _guarded("max-forcing", LOWER, "cf >= F(G)", lambda: max_forcing_number(g, pm_cap)[0]),
        _guarded(
            "matching-family", LOWER, "cf >= sum f(M) / k over all perfect matchings", lambda: _family_bound(g, pm_cap)
        ),
        _guarded(
            "edge-transitive",
            LOWER,
            "edge-transitive: cf >= (2|E|/|V|) F(G)",
            lambda: lower_bound_edge_transitive(g, pm_cap, **aut_kw),
        ),
        _guarded(
            "regular-bipartite",
            LOWER,
            "edge-transitive k-regular bipartite: cf >= (1 - ln(2e)/ln k) nk/2",
            lambda: _regular_bipartite(g, aut_kw),
        ),
    ]
    if exact:
        try:
            res = exact_cf(g, pm_cap, cycle_cap)
            if res.method == "exact":
                entries.append(BoundEntry("exact", EXACT, float(res.value), True, "", "minimum frame hitting set"))
            else:
                entries.append(BoundEntry("construction", UPPER, float(res.value), True, "", "best construction"))
                entries.append(_na("exact", EXACT, "enumeration cap exceeded", "minimum frame hitting set"))
        except NoPerfectMatching as exc:
            entries.append(_na("exact", EXACT, str(exc), "minimum frame hitting set"))
    return BoundReport(entries, {"planar": planar, "outerplanar": outerplanar})
