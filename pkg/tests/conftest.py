import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cforcing.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_graph_with_pm(rng: random.Random, n: int, p: float) -> Graph:
    """Connected graph on an even ``n`` that contains a perfect matching.

    A random perfect matching plus a random spanning tree, then extra edges
    with probability ``p``.
    """
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[i + 1]))) for i in range(0, n, 2)}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_pm(draw, max_n=10):
    n = draw(st.sampled_from([x for x in range(2, max_n + 1, 2)]))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.15, 0.3, 0.5]))
    return random_graph_with_pm(random.Random(seed), n, p)


@st.composite
def connected_graphs(draw, max_n=9, min_n=1):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.2, 0.4, 0.7]))
    return random_connected(random.Random(seed), n, p)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_RESULTS: list[tuple[str, bool, float, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, secs, note in ACCEPTANCE_RESULTS:
        extra = f" - {note}" if note else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label} ({secs:.2f}s){extra}")
