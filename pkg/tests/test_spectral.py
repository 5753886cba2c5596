import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs
from cforcing import generators as gen
from cforcing.fixtures import graph_h
from cforcing.graph import Graph, avg_two_degree, degeneracy, degree_stats, induced_delete
from cforcing.spectral import ConvergenceError, spectral_radius, yu_ratio, yu_rho_lower_bound


def numpy_rho(g):
    if g.m == 0:
        return 0.0
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return float(np.max(np.abs(np.linalg.eigvalsh(a))))


def test_h_closed_form():
    assert abs(spectral_radius(graph_h()) - (5 + math.sqrt(5)) / 2) < 1e-9


def test_known_values():
    assert abs(spectral_radius(gen.gen_complete(5)) - 4) < 1e-9
    assert abs(spectral_radius(gen.gen_path(2)) - 1) < 1e-9
    assert abs(spectral_radius(gen.gen_complete_multipartite([1, 4])) - 2) < 1e-9
    assert spectral_radius(Graph.from_edges(3, [])) == 0.0
    with pytest.raises(ValueError):
        spectral_radius(Graph.from_edges(0, []))


def test_iteration_budget():
    with pytest.raises(ConvergenceError):
        spectral_radius(gen.gen_path(30), max_iter=3)


@pytest.mark.parametrize(
    "g, k",
    [
        (gen.gen_cycle(16), 2),
        (gen.gen_hypercube(3), 3),
        (gen.gen_complete(4), 3),
        (gen.gen_hypercube(4), 4),
        (gen.gen_torus(4, 2), 4),
        (gen.gen_complete_multipartite([4, 4]), 4),
    ],
)
def test_regular_graphs_exact(g, k):
    assert abs(spectral_radius(g) - k) < 1e-9
    assert yu_rho_lower_bound(g) == k


def test_yu_ratio_on_h():
    h = graph_h()
    r = yu_ratio(h)
    assert r == Fraction(115, 9)
    assert r == Fraction(sum(t * t for t in (5, 10, 15, 15, 15, 15, 10, 5)), sum(d * d for d in degree_stats(h)[0]))
    assert yu_rho_lower_bound(h) <= spectral_radius(h)


@given(connected_graphs(max_n=10, min_n=2))
def test_matches_dense_eigensolver(g):
    assert abs(spectral_radius(g) - numpy_rho(g)) < 1e-8


@given(connected_graphs(max_n=10, min_n=2))
def test_interlacing_under_vertex_deletion(g):
    rho = spectral_radius(g)
    for v in range(g.n):
        sub, _, _ = induced_delete(g, [v])
        assert spectral_radius(sub) <= rho + 1e-8


@given(connected_graphs(max_n=10, min_n=2))
def test_min_average_two_degree_below_rho(g):
    rho = spectral_radius(g)
    assert min(avg_two_degree(g, v) for v in range(g.n)) <= rho + 1e-8
    assert yu_rho_lower_bound(g) <= rho + 1e-8


@given(connected_graphs(max_n=10, min_n=2))
def test_degeneracy_spectral_inequality_when_delta_large(g):
    d = degeneracy(g)[0]
    delta = degree_stats(g)[1]
    if delta >= 2 * d:
        assert spectral_radius(g) <= math.sqrt(4 * d * (delta - d)) + 1e-8
    assert spectral_radius(g) <= math.sqrt(2 * g.m - g.n + 1) + 1e-8
    assert spectral_radius(g) <= delta + 1e-8
