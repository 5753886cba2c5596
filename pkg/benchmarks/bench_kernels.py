"""Compare the compiled and pure-Python kernels on a few exact workloads.

    python benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import sys
import time

from cforcing import generators as gen
from cforcing._kernels import BACKEND
from cforcing.fixtures import graph_h
from cforcing.hitting import min_hitting_set
from cforcing.matchings import count_pms_containing, nice_cycle_masks, perfect_matching_masks
from cforcing.complete import frame_masks


def workloads():
    q4 = gen.gen_hypercube(4)
    g44 = gen.gen_grid(4, 4)
    k8 = gen.gen_complete(8)
    k88 = gen.gen_complete_multipartite([8, 8])
    frames = {f for pair in frame_masks(g44) for f in pair}
    frames_q3 = {f for pair in frame_masks(gen.gen_hypercube(3)) for f in pair}
    return [
        ("pm enumeration Q4 (272)", lambda b: perfect_matching_masks(q4, backend=b)),
        ("pm enumeration K8 (105)", lambda b: perfect_matching_masks(k8, backend=b)),
        ("pm count K8,8 (40320)", lambda b: count_pms_containing(k88, (), cap=10**9, backend=b)),
        ("nice cycles grid 4x4", lambda b: nice_cycle_masks(g44, backend=b)),
        ("nice cycles Q4", lambda b: nice_cycle_masks(q4, backend=b)),
        ("hitting set grid 4x4 frames", lambda b: min_hitting_set(frames, backend=b)),
        ("hitting set Q3 frames", lambda b: min_hitting_set(frames_q3, backend=b)),
        ("hitting set H frames", lambda b: min_hitting_set({f for p in frame_masks(graph_h()) for f in p}, backend=b)),
    ]


def best_of(fn, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions, best is kept")
    args = ap.parse_args(argv)
    if BACKEND != "cython":
        print("compiled kernels are not built; only the Python backend is timed", file=sys.stderr)
    backends = ["python"] + (["cython"] if BACKEND == "cython" else [])
    print(f"{'workload':32s} " + " ".join(f"{b:>10s}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    for name, fn in workloads():
        times = []
        results = []
        for b in backends:
            t, r = best_of(fn, b, args.repeat)
            times.append(t)
            results.append(sorted(r) if isinstance(r, (list, set)) else r)
        if len(results) == 2 and results[0] != results[1]:
            print(f"backend mismatch on {name}", file=sys.stderr)
            return 1
        row = f"{name:32s} " + " ".join(f"{t * 1000:9.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
