import pytest
from hypothesis import given

from conftest import graphs_with_pm
from oracles import brute_forcing_number, brute_is_forcing, brute_perfect_matchings
from cforcing import generators as gen
from cforcing.errors import NoPerfectMatching
from cforcing.fixtures import edges_named, graph_h
from cforcing.forcing import (
    ForcingCertificate,
    all_forcing_numbers,
    forcing_number,
    is_forcing_set,
    max_forcing_number,
)
from cforcing.matchings import enumerate_perfect_matchings


def test_h_worked_matchings():
    h = graph_h()
    m1 = edges_named(h, "ab cd ef gh")
    m2 = edges_named(h, "ah bc de fg")
    c1 = forcing_number(h, m1)
    assert c1.number == 1
    assert is_forcing_set(h, m1, edges_named(h, "ef"))
    # {cd} is also forcing and comes first lexicographically
    assert c1.forcing_set == edges_named(h, "cd")
    c2 = forcing_number(h, m2)
    assert c2.number == 2
    assert is_forcing_set(h, m2, edges_named(h, "bc fg"))
    assert not is_forcing_set(h, m2, edges_named(h, "bc"))
    f, cert = max_forcing_number(h)
    assert f == 2 and cert.number == 2


def test_h_forcing_spectrum():
    assert sorted(c.number for c in all_forcing_numbers(graph_h())) == [1, 2, 2, 2, 2, 2, 2]


def test_known_maximum_forcing_numbers():
    assert max_forcing_number(gen.gen_hypercube(3))[0] == 2
    assert max_forcing_number(gen.gen_cycle(6))[0] == 1
    assert max_forcing_number(gen.gen_path(4))[0] == 0


def test_rejections():
    h = graph_h()
    with pytest.raises(ValueError):
        forcing_number(h, edges_named(h, "ab cd"))
    with pytest.raises(ValueError):
        is_forcing_set(h, edges_named(h, "ab cd ef gh"), edges_named(h, "bc"))
    with pytest.raises(NoPerfectMatching):
        max_forcing_number(gen.gen_path(3))


def test_certificate_roundtrip():
    h = graph_h()
    cert = forcing_number(h, edges_named(h, "ah bc de fg"))
    assert ForcingCertificate.from_dict(cert.to_dict()) == cert
    bad = cert.to_dict()
    bad["number"] = 5
    with pytest.raises(ValueError):
        ForcingCertificate.from_dict(bad)


@given(graphs_with_pm(max_n=8))
def test_hitting_set_route_matches_subset_search(g):
    pms = brute_perfect_matchings(g.n, g.edges)
    for cert in all_forcing_numbers(g):
        m = cert.matching.edges
        assert cert.number == brute_forcing_number(pms, m)
        assert brute_is_forcing(pms, m, cert.forcing_set)


@given(graphs_with_pm(max_n=8))
def test_forcing_is_monotone_and_zero_iff_unique(g):
    pms = enumerate_perfect_matchings(g)
    for cert in all_forcing_numbers(g):
        assert (cert.number == 0) == (len(pms) == 1)
        m = cert.matching.edges
        # any superset of a forcing set inside M still forces
        assert is_forcing_set(g, cert.matching, m)
        for e in m - cert.forcing_set:
            assert is_forcing_set(g, cert.matching, cert.forcing_set | {e})
