"""Kernel backend selection.

The compiled module handles graphs with at most 64 vertices and 64 edges;
anything larger, or any run with ``CFORCING_PURE_PYTHON=1`` set, goes to the
pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("CFORCING_PURE_PYTHON"):
        raise ImportError("pure Python kernels requested")
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def backend_for(n_vertices: int, n_edges: int, force: str | None = None):
    """Kernel module to use for a graph of the given size."""
    if force == "python":
        return _pykernels
    if force == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if n_vertices > 64 or n_edges > 64:
            raise ValueError("compiled kernels are limited to 64 vertices and 64 edges")
        return _ckernels
    if _ckernels is not None and n_vertices <= 64 and n_edges <= 64:
        return _ckernels
    return _pykernels


__all__ = ["BACKEND", "backend_for"]
