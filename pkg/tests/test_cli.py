import json
import subprocess
import sys

import pytest

from cforcing.bounds import BoundReport
from cforcing.cli import main, golden_checks
from cforcing.complete import CfResult
from cforcing.fixtures import graph_h
from cforcing.graph import parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "-g", "example:H", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert data["cyclomatic"] == 6 and data["degeneracy"] == 3 and data["connected"]


def test_gen_roundtrips_through_input(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "-g", "grid:2x3")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (6, 7)
    path = tmp_path / "g.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "exact-cf", "-i", str(path), "-f", "json")
    assert code == 0 and json.loads(out)["value"] == 3


def test_exact_cf_h(capsys):
    code, out, _ = run(capsys, "exact-cf", "-g", "example:H", "-f", "json")
    data = json.loads(out)
    assert code == 0 and data["value"] == 6 and data["method"] == "exact"
    assert CfResult.from_dict(data).to_dict() == data


def test_bounds_json_roundtrip(capsys):
    _, out, _ = run(capsys, "bounds", "-g", "example:H", "-f", "json")
    data = json.loads(out)
    assert BoundReport.from_dict(data).to_dict() == data


def test_fnum_with_named_edges(capsys):
    code, out, _ = run(
        capsys, "fnum", "-g", "example:H", "--matching", "ab,cd,ef,gh", "--set", "ef", "-f", "json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["number"] == 1 and data["checked_set_forcing"] is True


def test_verify_plain(capsys):
    code, out, _ = run(capsys, "verify", "-g", "example:H", "--set", "cf,df,de,ce,ah,ef")
    assert code == 0 and out.count("yes") == 2
    code, out, _ = run(capsys, "verify", "-g", "example:H", "--set", "ab")
    assert code == 0 and "yes" not in out


def test_verify_as_forcing_set(capsys):
    code, out, _ = run(capsys, "verify", "-g", "example:H", "--set", "ef", "--matching", "ab,cd,ef,gh", "-f", "json")
    assert code == 0
    assert any(v is True for v in json.loads(out).values())


@pytest.mark.parametrize(
    "argv, code",
    [
        (["info"], 1),
        (["info", "-g", "cycle:4", "-i", "x"], 1),
        (["info", "-g", "bogus:3"], 1),
        (["info", "-g", "cycle:2"], 1),
        (["nosuch"], 1),
        (["exact-cf", "-g", "hypercube:4", "--pm-cap", "5"], 2),
        (["pm-list", "-g", "complete:8", "--pm-cap", "3"], 2),
        (["max-fnum", "-g", "path:3"], 3),
        (["exact-cf", "-g", "path:5"], 3),
        (["fnum", "-g", "example:H", "--matching", "ab,cd"], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    out, err = capsys.readouterr()
    assert got == code
    if code:
        assert err.strip()


def test_cap_output_still_printed(capsys):
    code, out, _ = run(capsys, "exact-cf", "-g", "hypercube:4", "--pm-cap", "5", "-f", "json")
    assert code == 2
    assert json.loads(out)["method"] == "constructed-upper-bound"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "info", "-i", str(tmp_path / "nope.txt"))
    assert code == 1 and err


def test_parse_error_is_usage(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 7\n")
    code, _, err = run(capsys, "info", "-i", str(p))
    assert code == 1 and "line 2" in err


def test_canonical_is_compact_and_deterministic(capsys):
    _, a, _ = run(capsys, "nice-cycles", "-g", "example:H", "-f", "json", "--canonical")
    _, b, _ = run(capsys, "nice-cycles", "-g", "example:H", "-f", "json", "--canonical")
    assert a == b and "\n" not in a.strip() and ": " not in a
    json.loads(a)


@pytest.mark.parametrize("fmt", ["plain", "json", "csv", "markdown"])
def test_bounds_formats(capsys, fmt):
    code, out, _ = run(capsys, "bounds", "-g", "cycle:6", "-f", fmt)
    assert code == 0 and out
    if fmt == "json":
        names = [e["name"] for e in json.loads(out)["entries"]]
        assert names[0] == "trivial" and names[-1] == "exact"


@pytest.mark.parametrize("order", ["given", "min-avg", "degeneracy", "w-set", "best"])
def test_construct_orders(capsys, order):
    code, out, _ = run(capsys, "construct", "-g", "example:H", "--order", order, "-f", "json")
    assert code == 0 and json.loads(out)["size"] >= 6


def test_construct_with_pi(capsys):
    code, out, _ = run(
        capsys, "construct", "-g", "example:L", "--order", "given", "--pi", "a,e,b,c,d,f,g,h", "-f", "json"
    )
    assert code == 0 and json.loads(out)["size"] == 12


def test_pm_list_count(capsys):
    code, out, _ = run(capsys, "pm-list", "-g", "example:H", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 7


def test_report_command_all_pass(capsys):
    assert all(e == o for _, e, o in golden_checks())
    code, out, _ = run(capsys, "report-paper")
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "cforcing", "info", "-g", "cycle:4", "-f", "json", "--canonical"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["m"] == graph_h().m - 9
