import io
import json
import subprocess
import sys

import pydot
import pytest

from hwnorms.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


def test_gram_json_example():
    rc, out, _ = call("gram", "--algebra", "G2", "--highest", "0,1", "--weight", "0,0", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["paths"] == [[2, 1, 1, 1, 2], [2, 1, 1, 2, 1]]
    assert data["gram"] == [["72", "36"], ["36", "24"]]
    assert data["algebra"]["cartan"] == [[2, -1], [-3, 2]]


def test_paths_example_with_negative_labels():
    rc, out, _ = call("paths", "--algebra", "A3", "--highest", "0,1,0", "--weight", "-1,1,-1")
    assert rc == 0
    assert "2,1,3" in out and "2,3,1" in out
    rows = [line for line in out.splitlines()[2:] if line.strip()]
    assert len(rows) == 2


def test_kw_boundary_example():
    assert call("kw-boundary", "--algebra", "A1", "--s", "1", "--m", "1") == (0, "0\n", "")


def test_norm_and_oracle():
    rc, out, _ = call("norm", "--algebra", "G2", "--highest", "0,1", "--word", "2,1,1,1",
                      "--oracle", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"bra": [2, 1, 1, 1], "ket": [2, 1, 1, 1], "value": "36", "oracle": "36"}
    rc, out, _ = call("norm", "--algebra", "G2", "--highest", "0,1", "--bra", "2,1,1,1,2",
                      "--ket", "2,1,1,2,1", "--format", "json")
    assert json.loads(out)["value"] == "36"


def test_staircase_command():
    rc, out, _ = call("staircase", "--algebra", "G2", "--highest", "0,1", "--word", "2,1,1", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["form"] == "prefixed" and data["norm"] == "12"
    rc, _, err = call("staircase", "--algebra", "G2", "--highest", "0,1", "--word", "2,1,1,2,1")
    assert rc == 2 and "not a staircase" in err


def test_minuscule_and_scan():
    rc, out, _ = call("minuscule-verify", "--algebra", "D5", "--s", "5", "--format", "json")
    assert rc == 0 and json.loads(out)["passed"] is True
    rc, out, _ = call("minuscule-verify", "--algebra", "A3", "--highest", "0,1,0")
    assert rc == 0 and out.endswith("overall: pass\n")
    rc, _, err = call("minuscule-verify", "--algebra", "G2", "--s", "1")
    assert rc == 2 and "minuscule" in err
    rc, out, _ = call("conjecture-scan", "--algebra", "G2", "--highest", "0,1", "--format", "json")
    assert rc == 0 and json.loads(out)["negatives"] == 0


def test_kw_outputs():
    rc, out, _ = call("kw-expand", "--algebra", "A1", "--s", "1", "--m", "3/2", "--format", "json")
    data = json.loads(out)
    assert data["terms"][0]["coefficient"] == "2/3" and data["prefactor_log2"] == "-1"
    rc, out, _ = call("kw-expand", "--algebra", "G2", "--s", "1", "--m", "1,1", "--format", "csv")
    assert rc == 0 and len(out.splitlines()) == 8
    rc, out, _ = call("kw-plot", "--algebra", "A1", "--s", "1", "--m", "1", "--sigma-min", "0",
                      "--sigma-max", "1", "--num", "3")
    lines = out.splitlines()
    assert lines[0] == "sigma,value"
    assert float(lines[-1].split(",")[1]) == pytest.approx(1.1752011936438014, rel=1e-12)


@pytest.mark.parametrize("name,highest", [("A3", "0,1,0"), ("A4", "0,1,0,0"), ("G2", "0,1"),
                                          ("G2", "1,0"), ("B2", "0,1"), ("D4", "1,0,0,0")])
def test_dot_output_parses(name, highest):
    rc, out, _ = call("weights", "--algebra", name, "--highest", highest, "--format", "dot")
    assert rc == 0
    graphs = pydot.graph_from_dot_data(out)
    assert graphs and len(graphs) == 1
    g = graphs[0]
    rc, js, _ = call("weights", "--algebra", name, "--highest", highest, "--format", "json")
    data = json.loads(js)
    assert len([n for n in g.get_nodes() if n.get_name() not in ("node", "edge", "graph")]) == \
        sum(len(level) for level in data["levels"])


@pytest.mark.parametrize("argv", [
    ("weights", "--algebra", "X9", "--highest", "1"),
    ("weights", "--algebra", "A2", "--highest", "1,a"),
    ("weights", "--algebra", "A2", "--highest", "1,-1"),
    ("paths", "--algebra", "A2", "--highest", "1,1", "--weight", "1"),
    ("norm", "--algebra", "A2", "--highest", "1,1", "--word", "3"),
    ("kw-boundary", "--algebra", "A2", "--s", "3", "--m", "1"),
    ("kw-boundary", "--algebra", "A2", "--s", "1", "--m", "1,-2"),
    ("kw-boundary", "--algebra", "A2", "--s", "1", "--m", "1,2,3"),
    ("kw-plot", "--algebra", "A1", "--s", "1", "--m", "1", "--sigma-max", "1e6", "--num", "2"),
])
def test_domain_errors_exit_2_with_one_line(argv):
    rc, out, err = call(*argv)
    assert rc == 2
    assert out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


def test_bad_flags_show_usage():
    rc = run(["gram", "--algebra", "G2"], stdout=io.StringIO(), stderr=io.StringIO())
    assert rc == 2
    rc = run(["nosuch"], stdout=io.StringIO(), stderr=io.StringIO())
    assert rc == 2


def test_level_cap_is_a_resource_error():
    rc, _, err = call("weights", "--algebra", "A1", "--highest", "40", "--level-cap", "5")
    assert rc == 2 and "level" in err


def test_console_script_is_byte_identical():
    argv = [sys.executable, "-m", "hwnorms.cli", "kw-expand", "--algebra", "G2", "--s", "2",
            "--m", "2,3", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and b'"residual": "0"' in first
