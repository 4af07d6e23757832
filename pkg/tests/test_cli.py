import json
import subprocess
import sys

import pytest

from shannon_coloring.cli import main, parse_grid, UsageError
from shannon_coloring.coloring import parse_coloring
from shannon_coloring.multigraph import parse_graph


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.txt"
    assert main(["generate", "-n", "60", "-d", "4", "-m", "2", "-s", "1", "--out", str(path)]) == 0
    return path


def test_generate_extremal(tmp_path):
    out = tmp_path / "t.txt"
    assert main(["generate", "--extremal", "4", "--out", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert (g.n, g.m, g.delta) == (3, 6, 4)


def test_generate_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for p in (a, b):
        main(["generate", "-n", "100", "-d", "6", "-m", "3", "-s", "1", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()


def test_generate_errors(capsys):
    assert main(["generate", "-n", "1", "-d", "3"]) == 2
    assert main(["generate", "--extremal", "3"]) == 2
    assert main(["generate"]) == 2


@pytest.mark.parametrize("alg", ["det", "seq", "dist", "vizing"])
def test_color_then_verify(tmp_path, graph_file, alg):
    out, stats = tmp_path / "c.txt", tmp_path / "s.jsonl"
    assert main(["color", "--in", str(graph_file), "--algorithm", alg, "--seed", "3",
                 "--out", str(out), "--stats", str(stats)]) == 0
    records = [json.loads(line) for line in stats.read_text().splitlines()]
    assert records[-1]["kind"] == "summary" and records[-1]["verification"]["proper"]
    assert all(r["v"] == 1 for r in records)
    bound = "vizing" if alg == "vizing" else "shannon"
    assert main(["verify", "--in", str(graph_file), "--coloring", str(out), "--bound", bound]) == 0


def test_fat_triangle_det_uses_six(tmp_path, capsys):
    g, c = tmp_path / "g", tmp_path / "c"
    main(["generate", "--extremal", "4", "--out", str(g)])
    assert main(["color", "--in", str(g), "--algorithm", "det", "--out", str(c)]) == 0
    assert "# colors_used 6" in c.read_text()


def test_seeded_runs_identical(tmp_path, graph_file):
    outs = []
    for i in range(2):
        out, stats = tmp_path / f"c{i}", tmp_path / f"s{i}"
        main(["color", "--in", str(graph_file), "--algorithm", "dist", "--seed", "7",
              "--out", str(out), "--stats", str(stats)])
        outs.append((out.read_bytes(), stats.read_bytes()))
    assert outs[0] == outs[1]


def test_verify_detects_corruption(tmp_path, graph_file, capsys):
    out = tmp_path / "c.txt"
    main(["color", "--in", str(graph_file), "--out", str(out)])
    g = parse_graph(graph_file.read_text())
    colors = parse_coloring(out.read_text(), g)
    e = g.incidence[g.eu[0]][1]
    colors[0] = colors[e]
    bad = tmp_path / "bad.txt"
    bad.write_text("".join(f"{i} {u} {v} {c}\n" for i, (u, v, c) in enumerate(zip(g.eu, g.ev, colors))))
    assert main(["verify", "--in", str(graph_file), "--coloring", str(bad)]) == 1
    report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert not report["proper"]


def test_verify_bound_too_small(tmp_path, graph_file):
    out = tmp_path / "c.txt"
    main(["color", "--in", str(graph_file), "--out", str(out)])
    assert main(["verify", "--in", str(graph_file), "--coloring", str(out), "--bound", "2"]) == 1
    assert main(["verify", "--in", str(graph_file), "--coloring", str(out), "--bound", "x"]) == 2


def test_missing_file(tmp_path):
    assert main(["color", "--in", str(tmp_path / "nope")]) == 2
    assert main(["verify", "--in", str(tmp_path / "nope"), "--coloring", "x"]) == 2


def test_flag_misuse(graph_file):
    assert main(["color", "--in", str(graph_file), "--algorithm", "det", "--ell", "8"]) == 2
    assert main(["color", "--in", str(graph_file), "--algorithm", "seq", "--budget", "4"]) == 2
    assert main(["color", "--in", str(graph_file), "--algorithm", "dist", "--ell", "2"]) == 2


def test_bench(tmp_path):
    out = tmp_path / "b.jsonl"
    assert main(["bench", "--grid", "n=32,64 d=3 mu=1,2 seeds=0-1 alg=seq,dist", "--out", str(out)]) == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(rows) == 8 and all(r["all_verified"] for r in rows)
    assert "chain_length_histogram" in rows[0] and "mean_stages" in rows[-1]


def test_parse_grid():
    grid = parse_grid("n=8,16 d=3 seeds=0-2,5 alg=det")
    assert grid["n"] == [8, 16] and grid["seeds"] == [0, 1, 2, 5]
    for bad in ("n=x", "q=1", "alg=foo", "junk"):
        with pytest.raises(UsageError):
            parse_grid(bad)


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "shannon_coloring", "generate", "--extremal", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("#")
