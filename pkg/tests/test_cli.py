import json

import pytest

from intervaltotal.cli import run
from intervaltotal.coloring import coloring_from_json
from intervaltotal.graph import complete_bipartite, from_edgelist, read_edgelist


def test_build_round_trip(tmp_path, capsys):
    out = tmp_path / "k24.txt"
    assert run(["build", "--family", "bipartite", "--m", "2", "--n", "4", "-o", str(out)]) == 0
    g = read_edgelist(out)
    k24 = complete_bipartite(2, 4)
    assert (g.n_vertices, g.edges) == (k24.n_vertices, k24.edges)
    assert run(["build", "--graph", str(out)]) == 0
    assert from_edgelist(capsys.readouterr().out) == g


def test_build_formats(capsys):
    assert run(["build", "--graph", "Q2", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["n_vertices"] == 4 and len(d["edges"]) == 4
    assert run(["build", "--graph", "K2", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("graph G {")


def test_construct_then_verify(tmp_path, capsys):
    col, gr = tmp_path / "c.json", tmp_path / "g.txt"
    assert run(["construct", "--family", "t8", "--n", "2", "--l", "2", "-o", str(col), "--graph-out", str(gr)]) == 0
    assert coloring_from_json(col.read_text()).t == 5
    assert run(["verify", "--graph", str(gr), "--coloring", str(col)]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


@pytest.mark.parametrize(
    "argv, graph",
    [
        (["--family", "t10", "--r", "4", "--n", "3"], "multipartite:4,3"),
        (["--family", "t11c1", "--r", "4", "--n", "2"], "multipartite:4,2"),
        (["--family", "t11c2", "--r", "3", "--n", "2"], "multipartite:3,2"),
        (["--family", "knn", "--n", "3"], "K3,3"),
        (["--family", "qn", "--n", "3", "--t", "10"], "Q3"),
        (["--family", "qlift", "--n", "2", "--t", "6"], "Q3"),
    ],
)
def test_construct_pipes_into_verify(tmp_path, capsys, argv, graph):
    col = tmp_path / "c.json"
    assert run(["construct", *argv, "-o", str(col)]) == 0
    assert run(["verify", "--graph", graph, "--coloring", str(col)]) == 0


def test_tampered_coloring_fails_verify(tmp_path, capsys):
    col = tmp_path / "c.json"
    run(["construct", "--family", "t8", "--n", "2", "--l", "2", "-o", str(col)])
    d = json.loads(col.read_text())
    d["edge_colors"][0]["c"] += 1
    col.write_text(json.dumps(d))
    capsys.readouterr()
    assert run(["verify", "--graph", "K2,4", "--coloring", str(col)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is False and report["violation"]


def test_bounds_json(capsys):
    assert run(["bounds", "--family", "qn", "--n", "3"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["w_tau"], d["W_tau"]) == (4, 10)


def test_search_exit_codes(tmp_path, capsys):
    wit = tmp_path / "w.json"
    assert run(["search", "--graph", "Q3", "--t", "10", "-o", str(wit)]) == 0
    assert coloring_from_json(wit.read_text()).t == 10
    assert run(["search", "--graph", "Q3", "--t", "11"]) == 1
    assert run(["search", "--graph", "Q4", "--t", "16", "--node-limit", "10"]) == 2
    assert run(["search", "--graph", "K2,2", "--mode", "spectrum"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert json.loads(lines[-1])["feasible"] == [4, 5, 6]
    assert run(["search", "--graph", "K4", "--mode", "wmin"]) == 0
    assert json.loads(capsys.readouterr().out)["w_tau"] == 6


def test_export_dot(tmp_path, capsys):
    col = tmp_path / "c.json"
    col.write_text('{"t":3,"vertex_colors":[1,3],"edge_colors":[{"u":1,"v":2,"c":2}]}')
    assert run(["export", "--graph", "K2", "--coloring", str(col)]) == 0
    out = capsys.readouterr().out
    assert 'label="3"' in out and '1 -- 2 [label="2"]' in out


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--family", "t10", "--r", "4", "--n", "2"],
        ["construct", "--family", "t8", "--n", "2"],
        ["construct", "--family", "qn", "--n", "3", "--t", "11"],
        ["bounds", "--family", "nope"],
        ["search", "--graph", "no-such-thing"],
        ["search", "--graph", "K2"],
        ["build"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 64


def test_construct_reports_internal_error(monkeypatch, capsys):
    from intervaltotal import constructions

    names, make, graph = constructions.CONSTRUCTIONS["knn"]

    def broken(n):
        c = make(n)
        clash = c.edge_colors[(0, n)]  # vertex 0 takes the color of an incident edge
        return type(c)(c.t, (clash,) + c.vertex_colors[1:], c.edge_colors)

    monkeypatch.setitem(constructions.CONSTRUCTIONS, "knn", (names, broken, graph))
    assert run(["construct", "--family", "knn", "--n", "2"]) == 70
    assert capsys.readouterr().out == ""


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "intervaltotal", "bounds", "--family", "kn", "--n", "4"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["W_tau"] == 7
