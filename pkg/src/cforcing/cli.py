"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 an enumeration cap or size
guard was hit, 3 the question does not apply to the input (for example no
perfect matching).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import generators as gen
from .bounds import full_report, qn_bounds
from .complete import (
    EXACT,
    exact_cf,
    is_complete_forcing_set_definitional,
    is_complete_forcing_set_frames,
)
from .construction import (
    STRATEGIES,
    algorithm_a,
    best_construction,
    best_w_set,
    order_given,
    order_min_avg_two_degree,
)
from .errors import CapExceeded, GuardExceeded, NoPerfectMatching, NotApplicable
from .fixtures import LETTERS, edges_named, graph_h, graph_l, vertices_named
from .forcing import forcing_number, is_forcing_set, max_forcing_number
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    avg_two_degree,
    connectivity,
    cyclomatic,
    degeneracy,
    degree_stats,
    is_bipartite,
    parse_edge_list,
    serialize_edge_list,
)
from .matchings import count_pms_containing, enumerate_nice_cycles, enumerate_perfect_matchings
from .spectral import spectral_radius, yu_rho_lower_bound

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_NA = 0, 1, 2, 3

GENERATOR_HELP = """\
generator specs:
  path:N  cycle:N  complete:N  wheel:N  hypercube:N
  multipartite:A,B,...   grid:RxC   torus:NxK (K-th power of the N-cycle)
  example:H  example:L   (the two lettered example graphs, vertices a..h)
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means "cap" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    input_path: str | None
    generator: str | None
    pm_cap: int
    cycle_cap: int
    aut_cap: int
    tol: float
    planar: bool
    outerplanar: bool
    canonical: bool
    fmt: str

    def validate(self) -> None:
        if (self.input_path is None) == (self.generator is None):
            raise UsageError("give exactly one of --input or --gen")
        if min(self.pm_cap, self.cycle_cap, self.aut_cap) < 1:
            raise UsageError("caps must be >= 1")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")


@dataclass
class Loaded:
    graph: Graph
    names: str | None = None

    def label(self, e: int) -> str:
        u, v = self.graph.edges[e]
        if self.names:
            return self.names[u] + self.names[v]
        return f"{u}-{v}"

    def labels(self, edge_set) -> list[str]:
        return [self.label(e) for e in sorted(edge_set)]

    def vertex(self, v: int) -> str:
        return self.names[v] if self.names else str(v)


def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"bad {what}: {text!r}") from None


def load_generator(spec: str) -> Loaded:
    name, _, params = spec.partition(":")
    name = name.strip().lower()
    try:
        if name == "example":
            key = params.strip().upper()
            if key not in ("H", "L"):
                raise UsageError("example graphs are H and L")
            return Loaded(graph_h() if key == "H" else graph_l(), LETTERS)
        simple: dict[str, Callable[[int], Graph]] = {
            "path": gen.gen_path,
            "cycle": gen.gen_cycle,
            "complete": gen.gen_complete,
            "wheel": gen.gen_wheel,
            "hypercube": gen.gen_hypercube,
        }
        if name in simple:
            return Loaded(simple[name](_int_arg(params, "size")))
        if name == "multipartite":
            return Loaded(gen.gen_complete_multipartite([_int_arg(p, "part size") for p in params.split(",")]))
        if name in ("grid", "torus"):
            a, sep, b = params.lower().partition("x")
            if not sep:
                raise UsageError(f"{name} spec needs AxB")
            fn = gen.gen_grid if name == "grid" else gen.gen_torus
            return Loaded(fn(_int_arg(a, "size"), _int_arg(b, "size")))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown generator {name!r}\n{GENERATOR_HELP}")


def load_input(cfg: RunConfig) -> Loaded:
    if cfg.generator is not None:
        return load_generator(cfg.generator)
    try:
        if cfg.input_path == "-":
            text = sys.stdin.read()
        else:
            with open(cfg.input_path, encoding="ascii") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.input_path}: {exc}") from None
    try:
        return Loaded(parse_edge_list(text))
    except GraphError as exc:
        raise UsageError(f"{cfg.input_path}: {exc}") from None


def parse_edge_tokens(loaded: Loaded, text: str) -> frozenset[int]:
    """Edges given as ``u-v`` pairs (or two-letter names on lettered graphs),
    separated by commas or whitespace."""
    g = loaded.graph
    out = set()
    for tok in text.replace(",", " ").split():
        if "-" in tok:
            a, _, b = tok.partition("-")
            u, v = _int_arg(a, "vertex"), _int_arg(b, "vertex")
        elif loaded.names and len(tok) == 2 and all(c in loaded.names for c in tok):
            u, v = loaded.names.index(tok[0]), loaded.names.index(tok[1])
        else:
            raise UsageError(f"cannot read edge {tok!r}; use u-v")
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise UsageError(f"{tok!r} is not an edge of the graph")
        out.add(g.edge_id(u, v))
    return frozenset(out)


def parse_vertex_tokens(loaded: Loaded, text: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        if loaded.names and tok in loaded.names:
            out.append(loaded.names.index(tok))
        else:
            out.append(_int_arg(tok, "vertex"))
    return out


# ------------------------------------------------------------------ output


def emit(cfg: RunConfig, data: dict, plain: Sequence[str], table: list[list] | None = None) -> None:
    out = sys.stdout
    if cfg.fmt == "json":
        if cfg.canonical:
            out.write(json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    elif cfg.fmt in ("csv", "markdown") and table is not None:
        header, *rows = table
        if cfg.fmt == "csv":
            import csv

            w = csv.writer(out, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        else:
            out.write("| " + " | ".join(map(str, header)) + " |\n")
            out.write("|" + "---|" * len(header) + "\n")
            for r in rows:
                out.write("| " + " | ".join(str(c).replace("|", "\\|") for c in r) + " |\n")
    else:
        for line in plain:
            out.write(line + "\n")


# ------------------------------------------------------------------ commands


def cmd_info(cfg, ld: Loaded) -> int:
    g = ld.graph
    deg, dmax, dmin = degree_stats(g)
    conn, omega = connectivity(g)
    d, _ = degeneracy(g)
    try:
        pm_count: int | str = len(enumerate_perfect_matchings(g, cfg.pm_cap))
    except CapExceeded:
        pm_count = f">{cfg.pm_cap}"
    rho = spectral_radius(g, cfg.tol) if g.n else 0.0
    data = {
        "n": g.n,
        "m": g.m,
        "degrees": deg,
        "max_degree": dmax,
        "min_degree": dmin,
        "connected": conn,
        "components": omega,
        "cyclomatic": cyclomatic(g),
        "degeneracy": d,
        "bipartite": is_bipartite(g),
        "perfect_matchings": pm_count,
        "spectral_radius": rho,
        "two_degree_avg": [str(avg_two_degree(g, v)) for v in range(g.n)],
    }
    if g.m:
        data["spectral_lower_bound"] = yu_rho_lower_bound(g)
    plain = [f"{k}: {v}" for k, v in data.items()]
    table = [["key", "value"]] + [[k, v] for k, v in data.items()]
    emit(cfg, data, plain, table)
    return EXIT_OK


def cmd_gen(cfg, ld: Loaded) -> int:
    text = serialize_edge_list(ld.graph)
    g = ld.graph
    emit(cfg, {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}, [text.rstrip("\n")],
         [["u", "v"]] + [list(e) for e in g.edges])
    return EXIT_OK


def cmd_pm_list(cfg, ld: Loaded) -> int:
    pms = enumerate_perfect_matchings(ld.graph, cfg.pm_cap)
    data = {"count": len(pms), "matchings": [m.to_dict() for m in pms]}
    plain = [f"{len(pms)} perfect matchings"] + [" ".join(ld.labels(m.edges)) for m in pms]
    table = [["index", "edges"]] + [[i, " ".join(ld.labels(m.edges))] for i, m in enumerate(pms)]
    emit(cfg, data, plain, table)
    return EXIT_OK


def cmd_nice_cycles(cfg, ld: Loaded) -> int:
    cycles = enumerate_nice_cycles(ld.graph, cfg.cycle_cap, cfg.pm_cap)
    data = {"count": len(cycles), "cycles": [c.to_dict() for c in cycles]}
    plain = [f"{len(cycles)} nice cycles"]
    rows = []
    for c in cycles:
        seq = ",".join(ld.vertex(v) for v in c.vertices)
        fa, fb = " ".join(ld.labels(c.frame_a)), " ".join(ld.labels(c.frame_b))
        plain.append(f"({seq})  frames [{fa}] [{fb}]")
        rows.append([seq, fa, fb])
    emit(cfg, data, plain, [["cycle", "frame_a", "frame_b"]] + rows)
    return EXIT_OK


def _matching_arg(args, ld: Loaded) -> frozenset[int]:
    if not args.matching:
        raise UsageError("--matching is required")
    m = parse_edge_tokens(ld, args.matching)
    if 2 * len(m) != ld.graph.n or count_pms_containing(ld.graph, m, cap=1) != 1:
        raise UsageError("--matching is not a perfect matching of the graph")
    return m


def cmd_fnum(cfg, ld: Loaded, args) -> int:
    m = _matching_arg(args, ld)
    cert = forcing_number(ld.graph, m, cfg.pm_cap)
    data = cert.to_dict()
    plain = [f"forcing number: {cert.number}", "minimum forcing set: " + " ".join(ld.labels(cert.forcing_set))]
    if args.set is not None:
        s = parse_edge_tokens(ld, args.set)
        if not s <= m:
            raise UsageError("--set must be a subset of --matching")
        ok = is_forcing_set(ld.graph, m, s)
        data["checked_set"] = sorted(s)
        data["checked_set_forcing"] = ok
        plain.append(f"{' '.join(ld.labels(s)) or '(empty)'} is {'a' if ok else 'not a'} forcing set")
    emit(cfg, data, plain, [["key", "value"]] + [[k, v] for k, v in data.items()])
    return EXIT_OK


def cmd_max_fnum(cfg, ld: Loaded) -> int:
    big_f, cert = max_forcing_number(ld.graph, cfg.pm_cap)
    data = {"max_forcing_number": big_f, "witness": cert.to_dict()}
    plain = [
        f"maximum forcing number: {big_f}",
        "attained by: " + " ".join(ld.labels(cert.matching.edges)),
        "with forcing set: " + " ".join(ld.labels(cert.forcing_set)),
    ]
    emit(cfg, data, plain, [["key", "value"], ["max_forcing_number", big_f]])
    return EXIT_OK


def cmd_construct(cfg, ld: Loaded, args) -> int:
    g = ld.graph
    label = args.order
    if args.order == "best":
        trace, label = best_construction(g)
    elif args.order == "given":
        pi = parse_vertex_tokens(ld, args.pi) if args.pi else list(range(g.n))
        try:
            pi = order_given(pi, g.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        trace = algorithm_a(g, pi)
    else:
        trace = algorithm_a(g, STRATEGIES[args.order](g))
    data = trace.to_dict()
    data["strategy"] = label
    plain = [
        f"strategy: {label}",
        "ordering: " + " ".join(ld.vertex(v) for v in trace.ordering),
        "selected: " + " ".join(ld.vertex(v) for v in trace.selected_vertices),
        f"|S| = {len(trace.s)}",
        "S: " + " ".join(ld.labels(trace.s)),
    ]
    rows = [["step", "vertex", "b_edges", "a_size", "two_degree"]]
    for i, st in enumerate(trace.steps, 1):
        rows.append([i, ld.vertex(st.vertex), " ".join(ld.labels(st.b_edges)), len(st.a_edges), st.two_degree])
    emit(cfg, data, plain, rows)
    return EXIT_OK


def cmd_verify(cfg, ld: Loaded, args) -> int:
    g = ld.graph
    s = parse_edge_tokens(ld, args.set)
    if args.matching:
        m = _matching_arg(args, ld)
        if not s <= m:
            raise UsageError("--set must be a subset of --matching")
        ok = is_forcing_set(g, m, s)
        data = {"set": sorted(s), "matching": sorted(m), "forcing": ok}
        emit(cfg, data, [f"forcing set: {'yes' if ok else 'no'}"], [["key", "value"], ["forcing", ok]])
        return EXIT_OK
    definitional = is_complete_forcing_set_definitional(g, s, cfg.pm_cap)
    frames = is_complete_forcing_set_frames(g, s, cfg.cycle_cap, cfg.pm_cap)
    data = {"set": sorted(s), "definitional": definitional, "frames": frames}
    plain = [
        f"complete forcing (every perfect matching): {'yes' if definitional else 'no'}",
        f"complete forcing (every nice-cycle frame): {'yes' if frames else 'no'}",
    ]
    emit(cfg, data, plain, [["check", "result"], ["definitional", definitional], ["frames", frames]])
    return EXIT_OK


def cmd_exact_cf(cfg, ld: Loaded) -> int:
    res = exact_cf(ld.graph, cfg.pm_cap, cfg.cycle_cap)
    data = res.to_dict()
    plain = [
        f"cf = {res.value}" if res.method == EXACT else f"cf <= {res.value} (caps exceeded)",
        f"method: {res.method}",
        "set: " + " ".join(ld.labels(res.optimal_set)),
        f"distinct frames: {res.constraints_used}",
    ]
    emit(cfg, data, plain, [["key", "value"]] + [[k, v] for k, v in data.items()])
    if res.method != EXACT:
        print("cforcing: enumeration cap exceeded, reporting the constructed upper bound", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def cmd_bounds(cfg, ld: Loaded, args) -> int:
    rep = full_report(
        ld.graph,
        planar=cfg.planar,
        outerplanar=cfg.outerplanar,
        exact=not args.no_exact,
        pm_cap=cfg.pm_cap,
        cycle_cap=cfg.cycle_cap,
        aut_cap=cfg.aut_cap,
        tol=cfg.tol,
    )
    if cfg.fmt == "json":
        emit(cfg, rep.to_dict(), [])
    elif cfg.fmt == "csv":
        sys.stdout.write(rep.to_csv())
    elif cfg.fmt == "markdown":
        sys.stdout.write(rep.to_markdown())
    else:
        for e in rep.entries:
            if e.applicable:
                sys.stdout.write(f"{e.kind:5} {e.name:24} {e.value:12.6f}  -> {e.rounded}\n")
            else:
                sys.stdout.write(f"{e.kind:5} {e.name:24} {'n/a':>12}  ({e.reason})\n")
    return EXIT_OK


# ------------------------------------------------------------------ golden checks


def golden_checks() -> list[tuple[str, object, object]]:
    """``(description, expected, observed)`` for each reproduced worked value."""
    h = graph_h()
    l_graph = graph_l()
    m1 = edges_named(h, "ab cd ef gh")
    m2 = edges_named(h, "ah bc de fg")
    s_h = edges_named(h, "cf df de ce ah ef")
    checks: list[tuple[str, object, object]] = []

    def add(name, expected, observed):
        checks.append((name, expected, observed))

    add("H: perfect matchings", 7, len(enumerate_perfect_matchings(h)))
    add("H: {ef} forces M1", True, is_forcing_set(h, m1, edges_named(h, "ef")))
    add("H: f(M1)", 1, forcing_number(h, m1).number)
    add("H: {bc, fg} forces M2", True, is_forcing_set(h, m2, edges_named(h, "bc fg")))
    add("H: f(M2)", 2, forcing_number(h, m2).number)
    add("H: F(H)", 2, max_forcing_number(h)[0])
    add("H: 6-edge set is complete forcing (matchings)", True, is_complete_forcing_set_definitional(h, s_h))
    add("H: 6-edge set is complete forcing (frames)", True, is_complete_forcing_set_frames(h, s_h))
    add("H: cf(H)", 6, exact_cf(h).value)
    add("H: degeneracy", 3, degeneracy(h)[0])
    rho = spectral_radius(h)
    add("H: spectral radius (5+sqrt5)/2 within 1e-9", True, abs(rho - (5 + math.sqrt(5)) / 2) < 1e-9)
    add("H: spectral bound floor", 9, math.floor((1 - 1 / rho) * h.m))
    trace = algorithm_a(h, range(h.n))
    add(
        "H: construction with order a..h",
        sorted(edges_named(h, "bc bd gh de df ef fg eg")),
        sorted(trace.s),
    )
    add("H: min-avg construction size", 7, len(algorithm_a(h, order_min_avg_two_degree(h)).s))
    w = best_w_set(l_graph)
    add("L: best W-set size", 1, len(w.vertices))
    add("L: best W-set boundary", 5, len(w.boundary))
    add("L: E minus boundary(W)", 13, len(w.complement))
    order = vertices_named("ae") + [v for v in range(8) if v not in vertices_named("ae")]
    add("L: construction with a, e first", 12, len(algorithm_a(l_graph, order).s))
    for r, c in ((2, 2), (2, 4), (4, 4)):
        formula = (c // 2) * (r - 1) + (r // 2) * (c - 1)
        add(f"grid {r}x{c}: cf matches formula", formula, exact_cf(gen.gen_grid(r, c)).value)
    add("Q4: upper bound", 22, qn_bounds(4)[1])
    return checks


def cmd_report_golden(cfg, ld: Loaded | None) -> int:
    checks = golden_checks()
    ok_all = all(exp == got for _, exp, got in checks)
    data = {
        "all_passed": ok_all,
        "checks": [{"name": n, "expected": e, "observed": o, "passed": e == o} for n, e, o in checks],
    }
    plain = [f"{'PASS' if e == o else 'FAIL'}  {n}: expected {e}, got {o}" for n, e, o in checks]
    rows = [["check", "expected", "observed", "passed"]] + [[n, e, o, e == o] for n, e, o in checks]
    emit(cfg, data, plain, rows)
    return EXIT_OK if ok_all else EXIT_NA


# ------------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input (exactly one)")
    src.add_argument("-i", "--input", help="edge-list file ('-' for stdin)")
    src.add_argument("-g", "--gen", help="generator spec, e.g. hypercube:4, grid:4x4, example:H")
    common.add_argument("--pm-cap", type=int, default=10**6, help="perfect matching enumeration cap")
    common.add_argument("--cycle-cap", type=int, default=10**6, help="nice cycle enumeration cap")
    common.add_argument("--aut-cap", type=int, default=100_000, help="automorphism enumeration cap")
    common.add_argument("--tol", type=float, default=1e-10, help="spectral radius tolerance")
    common.add_argument("--planar", action="store_true", help="assert that the graph is planar")
    common.add_argument("--outerplanar", action="store_true", help="assert that the graph is outerplanar")
    common.add_argument("--canonical", action="store_true", help="compact JSON with sorted keys")
    common.add_argument(
        "-f", "--format", dest="fmt", choices=["plain", "json", "csv", "markdown"], default="plain"
    )

    p = _Parser(
        prog="cforcing",
        description="Complete forcing sets of graphs with perfect matchings.",
        epilog=GENERATOR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("info", parents=[common], help="basic graph invariants")
    sub.add_parser("gen", parents=[common], help="print the graph in edge-list format")
    sub.add_parser("pm-list", parents=[common], help="list perfect matchings")
    sub.add_parser("nice-cycles", parents=[common], help="list nice cycles with their frames")
    sp = sub.add_parser("fnum", parents=[common], help="forcing number of a perfect matching")
    sp.add_argument("--matching", required=True, help="the perfect matching, e.g. 0-1,2-3")
    sp.add_argument("--set", help="also check whether this subset forces the matching")
    sub.add_parser("max-fnum", parents=[common], help="maximum forcing number")
    sp = sub.add_parser("construct", parents=[common], help="build a complete forcing set greedily")
    sp.add_argument("--order", choices=["given", "min-avg", "degeneracy", "w-set", "best"], default="best")
    sp.add_argument("--pi", help="vertex ordering for --order given (default: index order)")
    sp = sub.add_parser("verify", parents=[common], help="check a complete forcing set (or a forcing set)")
    sp.add_argument("--set", required=True, help="edges, e.g. 0-1,2-3 (or ab,cd on example graphs)")
    sp.add_argument("--matching", help="check --set as a forcing set of this perfect matching instead")
    sub.add_parser("exact-cf", parents=[common], help="exact complete forcing number")
    sp = sub.add_parser("bounds", parents=[common], help="all bounds on cf")
    sp.add_argument("--no-exact", action="store_true", help="skip the exact solver")
    rp = sub.add_parser("report-paper", parents=[common], help="reproduce the reference worked examples")
    rp.set_defaults(no_input=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input_path=args.input,
        generator=args.gen,
        pm_cap=args.pm_cap,
        cycle_cap=args.cycle_cap,
        aut_cap=args.aut_cap,
        tol=args.tol,
        planar=args.planar,
        outerplanar=args.outerplanar,
        canonical=args.canonical,
        fmt=args.fmt,
    )
    try:
        if cfg.command == "report-paper":
            return cmd_report_golden(cfg, None)
        cfg.validate()
        ld = load_input(cfg)
        simple = {
            "info": cmd_info,
            "gen": cmd_gen,
            "pm-list": cmd_pm_list,
            "nice-cycles": cmd_nice_cycles,
            "max-fnum": cmd_max_fnum,
            "exact-cf": cmd_exact_cf,
        }
        if cfg.command in simple:
            return simple[cfg.command](cfg, ld)
        with_args = {"fnum": cmd_fnum, "construct": cmd_construct, "verify": cmd_verify, "bounds": cmd_bounds}
        return with_args[cfg.command](cfg, ld, args)
    except UsageError as exc:
        print(f"cforcing: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, GuardExceeded) as exc:
        print(f"cforcing: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NoPerfectMatching, NotApplicable, DisconnectedGraphError) as exc:
        print(f"cforcing: {exc}", file=sys.stderr)
        return EXIT_NA


if __name__ == "__main__":
    sys.exit(main())
