"""The two small worked-example graphs used throughout the tests and the CLI.

Vertices ``a..h`` are numbered ``0..7``.
"""

from __future__ import annotations

from .graph import Graph

LETTERS = "abcdefgh"

H_EDGES = "ab ah bc bd cd ce cf de df ef eg fg gh"
L_EDGES = "ac ab ad af ah cb cd cf ch eb eg ed ef eh gh gb gd gf"


def _from_pairs(spec: str) -> Graph:
    return Graph.from_edges(8, [(LETTERS.index(p[0]), LETTERS.index(p[1])) for p in spec.split()])


def graph_h() -> Graph:
    """13 edges, 7 perfect matchings."""
    return _from_pairs(H_EDGES)


def graph_l() -> Graph:
    """18 edges, diameter 2."""
    return _from_pairs(L_EDGES)


def edges_named(g: Graph, names: str) -> frozenset[int]:
    """Translate e.g. ``"ab cd"`` into edge indices of ``g``."""
    return frozenset(g.edge_id(LETTERS.index(p[0]), LETTERS.index(p[1])) for p in names.split())


def vertices_named(names: str) -> list[int]:
    return [LETTERS.index(c) for c in names]


def name_edges(g: Graph, edge_set) -> list[str]:
    return sorted(g.edge_label(e, LETTERS) for e in edge_set)
