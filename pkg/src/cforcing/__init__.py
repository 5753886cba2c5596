"""Complete forcing sets of graphs with perfect matchings."""

from ._kernels import BACKEND
from .complete import exact_cf, is_complete_forcing_set_definitional, is_complete_forcing_set_frames
from .construction import algorithm_a, best_construction
from .forcing import forcing_number, max_forcing_number
from .graph import Graph, parse_edge_list, serialize_edge_list
from .matchings import enumerate_nice_cycles, enumerate_perfect_matchings

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "algorithm_a",
    "best_construction",
    "enumerate_nice_cycles",
    "enumerate_perfect_matchings",
    "exact_cf",
    "forcing_number",
    "is_complete_forcing_set_definitional",
    "is_complete_forcing_set_frames",
    "max_forcing_number",
    "parse_edge_list",
    "serialize_edge_list",
]
