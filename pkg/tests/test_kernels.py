import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import graphs_with_pm
from cforcing._kernels import BACKEND, _pykernels, backend_for
from cforcing import generators as gen
from cforcing.matchings import _tables, perfect_matching_masks

needs_c = pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")


def test_backend_selection_limits():
    assert backend_for(10, 10, "python") is _pykernels
    assert backend_for(65, 10) is _pykernels
    assert backend_for(10, 65) is _pykernels
    if BACKEND == "cython":
        assert backend_for(10, 10).BACKEND == "cython"
        with pytest.raises(ValueError):
            backend_for(10, 70, "cython")


def test_pure_python_switch_in_subprocess():
    env = dict(os.environ, CFORCING_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from cforcing._kernels import BACKEND; print(BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_large_graph_uses_python_path():
    g = gen.gen_cycle(66)  # beyond the compiled limit
    assert backend_for(g.n, g.m) is _pykernels
    assert len(perfect_matching_masks(g)) == 2
    assert len(perfect_matching_masks(gen.gen_grid(2, 12))) == 233


@needs_c
@given(graphs_with_pm(max_n=12))
def test_backends_agree(g):
    c = importlib.import_module("cforcing._kernels._ckernels")
    py = _pykernels
    inc_by_edge, inc = _tables(g)
    pa = sorted(py.enumerate_pms(g.n, inc_by_edge, 10**6))
    ca = sorted(int(x) for x in c.enumerate_pms(g.n, inc_by_edge, 10**6))
    assert pa == ca
    assert py.enumerate_pms(g.n, inc_by_edge, 0) == c.enumerate_pms(g.n, inc_by_edge, 0) == (None if pa else [])
    for covered in (0, 1, 0b11):
        assert py.count_pms(g.n, inc_by_edge, covered, 50) == c.count_pms(g.n, inc_by_edge, covered, 50)
    cyc_p = py.nice_cycle_masks(pa, g.edges, inc)
    cyc_c = {int(x) for x in c.nice_cycle_masks(ca, g.edges, inc)}
    assert cyc_p == cyc_c
    frames = sorted({x & pa[0] for x in cyc_p if x & pa[0]})
    if frames:
        lp = py.min_hitting_set(frames, len(frames) + 1)
        lc = c.min_hitting_set(frames, len(frames) + 1)
        assert lp.bit_count() == int(lc).bit_count()
        assert py.feasible_hitting_set(frames, 0, lp.bit_count() - 1) is None
        assert c.feasible_hitting_set(frames, 0, lp.bit_count() - 1) is None


def test_benchmark_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    res = subprocess.run(
        [sys.executable, os.path.join(root, "benchmarks", "bench_kernels.py"), "--repeat", "1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0, res.stderr
    assert "hitting set" in res.stdout
