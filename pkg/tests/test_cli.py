import json
import subprocess
import sys
from fractions import Fraction

import pytest

from treepack.cli import run
from treepack.generators import complete, cycle, mincut_stream
from treepack.lowerbound import build_instance
from treepack.multigraph import format_graph, format_stream
from treepack.packing import parse_packing_dump


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_pack_c4(files, capsys):
    path = files("c4.txt", format_graph(cycle(4)))
    assert run(["pack", "--trees", "12", "--graph", path]) == 0
    out = capsys.readouterr().out.splitlines()
    trees = parse_packing_dump("\n".join(out[:-1]))
    assert len(trees) == 12
    table = json.loads(out[-1])
    assert table["greedy"] and set(table["loads"].values()) == {"3/4"}


@pytest.mark.parametrize("what,value", [("lambda", 3), ("phi", 2), ("alpha", 2), ("rho", "3/2")])
def test_oracle(files, capsys, what, value):
    path = files("k4.txt", format_graph(complete(4)))
    assert run(["oracle", "--what", what, "--graph", path]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == value


def test_lowerbound_report(tmp_path):
    out = tmp_path / "lb.json"
    dump = tmp_path / "lb.trees"
    assert run(["lowerbound", "--n", "10", "--k", "1", "--out", str(out),
                "--dump-trees", str(dump)]) == 0
    doc = json.loads(out.read_text())
    assert doc["trees"] == 18 and doc["max_load"] == 10 and doc["error"] == "1/18"
    assert len(parse_packing_dump(dump.read_text())) == 18


def test_lowerbound_scaled(capsys):
    assert run(["lowerbound", "--n", "10", "--k", "1", "--scale", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["scaled"] == {"scale": 2, "size": 36, "lambda": 4, "error": "1/36"}


def test_lowerbound_capacity_is_an_input_error(capsys):
    assert run(["lowerbound", "--n", "20", "--k", "3"]) == 2
    assert "tail has 12 pairs" in capsys.readouterr().err


def test_existence(files, tmp_path):
    path = files("g10.txt", format_graph(build_instance(10, 1).graph))
    rep = tmp_path / "rep.json"
    dump = tmp_path / "p.trees"
    assert run(["existence", "--epsilon", "1/2", "--graph", path, "--out", str(dump),
                "--report", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    assert doc["ok"] and doc["size"] <= doc["bound"] == 32


def test_mincut_verify(files, tmp_path):
    g0, ups = mincut_stream(5, 6, 60)
    gp = files("g.txt", format_graph(g0))
    sp = files("s.txt", format_stream(ups))
    out = tmp_path / "mc.jsonl"
    assert run(["mincut", "verify", "--lambda-max", "3", "--const", "1/2", "--graph", gp,
                "--stream", sp, "--out", str(out)]) == 0
    rows = _json_lines(out.read_text())
    assert rows[0]["kind"] == "header" and rows[-1]["kind"] == "summary"
    assert len(rows) == len(ups) + 2
    assert all(r["ok"] for r in rows[1:-1])
    assert rows[-1]["mismatches"] == 0


def test_arboricity_jsonl(files, tmp_path):
    gp = files("k4.txt", format_graph(complete(4)))
    sp = files("s.txt", "- 0 1\n+ 0 1\n+ 0 1\n")
    out = tmp_path / "arb.jsonl"
    assert run(["arboricity", "--epsilon", "1/4", "--const", "1/4", "--graph", gp,
                "--stream", sp, "--out", str(out), "--verify"]) == 0
    rows = _json_lines(out.read_text())
    assert rows[0]["m_max"] == 8
    for r in rows[1:-1]:
        assert set(r) == {"update_index", "estimate_num", "estimate_den", "level", "oracle", "ok"}
        assert r["ok"] and r["estimate_den"] > 0
    assert Fraction(rows[1]["estimate_num"], rows[1]["estimate_den"]) <= Fraction(5, 2)


@pytest.mark.parametrize("argv", [
    ["oracle", "--what", "lambda", "--graph", "/nonexistent/graph.txt"],
    ["pack", "--trees", "2", "--graph", "BAD"],
])
def test_input_errors_exit_2(files, argv):
    if argv[-1] == "BAD":
        argv[-1] = files("bad.txt", "p mgraph 2 1\ne 0 5\n")
    assert run(argv) == 2


def test_usage_error_exit_2():
    assert run(["mincut"]) == 2


def test_delete_of_absent_edge_is_input_error(files):
    gp = files("g.txt", format_graph(cycle(3)))
    sp = files("s.txt", "- 0 0\n")
    assert run(["mincut", "--lambda-max", "2", "--graph", gp, "--stream", sp]) == 2


def test_check_quick_smoke(capsys):
    assert run(["check", "existence", "--quick"]) == 0
    assert capsys.readouterr().out.startswith("[PASS]")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "treepack", "--version"], capture_output=True,
                          text=True, check=True)
    assert proc.stdout.startswith("treepack ")
