"""Spectral radius of the adjacency matrix, and its 2-degree lower bound."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .graph import Graph, two_degree

DEFAULT_TOL = 1e-10
MAX_ITER = 1_000_000


class ConvergenceError(RuntimeError):
    pass


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float:
    """Largest adjacency eigenvalue by power iteration on ``A + I``.

    The shift keeps ``rho + 1`` strictly dominant on bipartite graphs, and the
    all-ones start vector has a nonzero component along every Perron vector.
    Iteration stops once the eigen-residual ``|(A+I)x - q x|`` of the unit
    iterate drops below ``tol``; for a symmetric matrix this puts the
    Rayleigh quotient ``q`` within ``tol`` of an eigenvalue.
    """
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    if g.m == 0:
        return 0.0
    ends = np.asarray(g.edges, dtype=np.int64)
    u, v = ends[:, 0], ends[:, 1]
    n = g.n

    def apply(x: np.ndarray) -> np.ndarray:
        return x + np.bincount(u, weights=x[v], minlength=n) + np.bincount(v, weights=x[u], minlength=n)

    x = np.ones(n) / math.sqrt(n)
    for _ in range(max_iter):
        y = apply(x)
        q = float(x @ y)
        resid = float(np.linalg.norm(y - q * x))
        if resid <= tol:
            return q - 1.0
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps")


def _exact_sqrt(q: Fraction) -> float:
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return ra / rb
    return math.sqrt(a / b)


def yu_ratio(g: Graph) -> Fraction:
    """``sum t_i^2 / sum d_i^2`` as an exact fraction."""
    num = sum(two_degree(g, v) ** 2 for v in range(g.n))
    den = sum(len(row) ** 2 for row in g.adj)
    if den == 0:
        raise ValueError("graph has no edges")
    return Fraction(num, den)


def yu_rho_lower_bound(g: Graph) -> float:
    """``sqrt(sum t_i^2 / sum d_i^2)``, a lower bound on the spectral radius.

    Exact whenever the ratio is the square of a rational (e.g. regular graphs).
    """
    return _exact_sqrt(yu_ratio(g))
