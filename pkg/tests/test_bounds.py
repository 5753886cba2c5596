import math

import pytest
from hypothesis import given

from conftest import graphs_with_pm
from cforcing import generators as gen
from cforcing.bounds import (
    LOWER,
    UPPER,
    BoundReport,
    bound_deg_via_spectral,
    bound_planar_degeneracy,
    bound_spectral,
    cnk_lower,
    degeneracy_route_violations,
    full_report,
    lower_bound_edge_transitive,
    lower_bound_matching_family,
    lower_bound_regular_bipartite,
    qn_bounds,
    tree_product_bound,
)
from cforcing.errors import NotApplicable
from cforcing.fixtures import graph_h
from cforcing.matchings import enumerate_perfect_matchings


def test_h_spectral_floor():
    assert bound_spectral(graph_h()).rounded == 9


def test_h_report_sandwich():
    rep = full_report(graph_h(), planar=True)
    assert rep.get("exact").value == 6
    assert rep.get("max-forcing").value == 2
    assert rep.get("matching-family").value == pytest.approx(13 / 4)
    assert not rep.get("edge-transitive").applicable
    assert rep.get("planar-degeneracy").applicable is False


def test_hypercube_numbers():
    lo, hi = qn_bounds(4)
    assert hi == 22 and lo == 0.0
    raw, _ = qn_bounds(4, clamp=False)
    assert raw < 0
    assert qn_bounds(6)[1] == 152
    with pytest.raises(ValueError):
        qn_bounds(3)
    q3 = gen.gen_hypercube(3)
    assert lower_bound_edge_transitive(q3) == 6.0
    with pytest.raises(NotApplicable):
        lower_bound_edge_transitive(graph_h())


def test_closed_forms():
    assert cnk_lower(4, 2) == 16
    assert lower_bound_regular_bipartite(16, 4) == 0.0
    assert lower_bound_regular_bipartite(16, 4, clamp=False) == pytest.approx(
        (1 - math.log(2 * math.e) / math.log(4)) * 32
    )
    # a path of 3 vertices is a tree: k=1, Delta=2, coefficient 2*sqrt(2)-1
    assert tree_product_bound([3], 2) == pytest.approx((1 - 1 / (2 * math.sqrt(2) - 1)) * 2)
    with pytest.raises(ValueError):
        tree_product_bound([], 2)
    with pytest.raises(ValueError):
        cnk_lower(5, 1)


def test_matching_family_rejects_overlap():
    h = graph_h()
    pms = enumerate_perfect_matchings(h)
    assert lower_bound_matching_family(h, pms[:1], 1) == 1.0
    with pytest.raises(ValueError):
        lower_bound_matching_family(h, pms, 1)


def test_degeneracy_route_violations_characterized():
    bad = set(degeneracy_route_violations(50))
    want = {(d, delta) for delta in range(1, 51) for d in range(1, delta + 1) if 16 * delta < 25 * d}
    assert bad == want
    assert len(bad) == 483


def test_applicability_conditions():
    k4 = gen.gen_complete(4)
    assert not bound_deg_via_spectral(k4).applicable
    assert not bound_planar_degeneracy(gen.gen_cycle(6), planar=True).applicable
    star = gen.gen_complete_multipartite([1, 6])
    assert bound_deg_via_spectral(star).applicable


def test_report_formats_roundtrip():
    rep = full_report(gen.gen_cycle(4))
    assert BoundReport.from_dict(rep.to_dict()).to_dict() == rep.to_dict()
    md = rep.to_markdown()
    assert md.count("\n") == len(rep.entries) + 2
    assert "-0.000000" not in full_report(gen.gen_path(2)).to_markdown()
    assert rep.to_csv().splitlines()[0] == "name,kind,raw,rounded,applicable,anchor"


def test_cap_adds_construction_entry():
    rep = full_report(gen.gen_hypercube(4), pm_cap=5)
    assert rep.get("construction").applicable
    assert not rep.get("exact").applicable


@given(graphs_with_pm(max_n=10))
def test_sandwich(g):
    rep = full_report(g)
    cf = rep.get("exact").value
    for e in rep.applicable(LOWER):
        assert e.rounded <= cf
    for e in rep.applicable(UPPER):
        assert cf <= e.rounded
        # 2(m - n + 1) can exceed m on dense graphs; every other bound is <= m by form
        if e.name != "cyclomatic":
            assert e.rounded <= g.m


def test_cyclomatic_bound_can_exceed_edge_count():
    k6 = gen.gen_complete(6)
    assert full_report(k6, exact=False).get("cyclomatic").rounded == 20 > k6.m
