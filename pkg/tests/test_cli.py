"""End-to-end checks of the command-line interface."""

from __future__ import annotations

import json
import subprocess
import sys


def run_cli(args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "strongedge", *args],
        input=stdin, capture_output=True, text=True)


def test_gen_emits_edge_list():
    r = run_cli(["gen", "triangle_with_leaves", "4"])
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "9 9"
    assert len(lines) == 10


def test_gen_bad_parameter_exits_2():
    r = run_cli(["gen", "triangle_with_leaves", "1"])
    assert r.returncode == 2


def test_gen_color_pipeline():
    gen = run_cli(["gen", "triangle_with_leaves", "4"])
    col = run_cli(["color", "--delta", "4"], stdin=gen.stdout)
    assert col.returncode == 0
    data = json.loads(col.stdout)
    assert data["palette_size"] == 14
    assert data["stats"]["max_omega"] <= 13
    assert data["stats"]["max_pendant_forbidden"] <= 9


def test_color_trace_lines():
    gen = run_cli(["gen", "star", "3"])
    col = run_cli(["color", "--trace"], stdin=gen.stdout)
    assert col.returncode == 0
    assert col.stderr.startswith("PENDANT 0 ")


def test_color_paranoid_matches_default():
    gen = run_cli(["gen", "random_two_degenerate", "25", "5", "--seed", "3"])
    a = run_cli(["color"], stdin=gen.stdout)
    b = run_cli(["color", "--paranoid"], stdin=gen.stdout)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_color_rejects_bad_input():
    r = run_cli(["color"], stdin="0 1 junk\n")
    assert r.returncode == 2


def test_color_rejects_non_two_degenerate():
    k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    r = run_cli(["color"], stdin=k4)
    assert r.returncode == 2


def test_verify_ok_and_corrupted(tmp_path):
    gen = run_cli(["gen", "triangle_with_leaves", "3"])
    graph_file = tmp_path / "g.txt"
    graph_file.write_text(gen.stdout)
    col = run_cli(["color", str(graph_file)])
    data = json.loads(col.stdout)

    good = tmp_path / "good.json"
    good.write_text(json.dumps(data))
    r = run_cli(["verify", str(graph_file), str(good)])
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True

    # plant the primed twin of edge 0's color on edge 1 (they share vertex
    # 0), so property (3) must fire there
    data["colors"][1] = {"set": "B'", "index": data["colors"][0]["index"]}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    r = run_cli(["verify", str(graph_file), str(bad)])
    assert r.returncode == 1
    verdict = json.loads(r.stdout)
    assert verdict["ok"] is False
    kinds = {v["kind"] for v in verdict["violations"]}
    assert "prime_pair_at_vertex" in kinds


def test_verify_mismatched_graph_exits_2(tmp_path):
    gen = run_cli(["gen", "path", "4"])
    graph_file = tmp_path / "g.txt"
    graph_file.write_text(gen.stdout)
    col = run_cli(["color", str(graph_file)])
    other = tmp_path / "other.txt"
    other.write_text(run_cli(["gen", "path", "5"]).stdout)
    coloring_file = tmp_path / "c.json"
    coloring_file.write_text(col.stdout)
    r = run_cli(["verify", str(other), str(coloring_file)])
    assert r.returncode == 2


def test_exact_c5():
    gen = run_cli(["gen", "cycle", "5"])
    r = run_cli(["exact"], stdin=gen.stdout)
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["chi_s"] == 5
    assert data["budget_exhausted"] is False


def test_exact_witness_included():
    gen = run_cli(["gen", "path", "4"])
    r = run_cli(["exact", "--witness"], stdin=gen.stdout)
    data = json.loads(r.stdout)
    assert data["chi_s"] == 3
    assert len(data["witness"]["colors"]) == 3


def test_color_out_flag(tmp_path):
    gen = run_cli(["gen", "path", "6"])
    out = tmp_path / "c.json"
    r = run_cli(["color", "--out", str(out)], stdin=gen.stdout)
    assert r.returncode == 0
    assert json.loads(out.read_text())["n"] == 6


def test_bench_smoke():
    r = run_cli(["bench", "--families", "path,random_two_degenerate",
                 "--count", "4", "--max-n", "12", "--seed", "1"])
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0].split("\t") == [
        "family", "n", "m", "delta", "colors_used", "max_omega", "verified", "chi_s"]
    assert all(row.split("\t")[6] == "true" for row in lines[1:])


def test_bench_reproducible():
    args = ["bench", "--families", "random_two_degenerate",
            "--count", "5", "--max-n", "15", "--seed", "7"]
    assert run_cli(args).stdout == run_cli(args).stdout
