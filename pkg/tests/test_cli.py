import csv
import io
import json
import subprocess
import sys

import pytest

from hypermc.cli import main
from hypermc.formats import dumps_coloring, dumps_hypergraph, read_coloring, read_hypergraph
from hypermc.hypercore import largest_mono_component, make_hypergraph


def run(*argv):
    return main([str(a) for a in argv])


def read_json(path):
    return json.loads(path.read_text())


def test_gen_extremal(tmp_path):
    prefix = tmp_path / "ex10_3"
    assert run("gen", "extremal-example", "--n", 10, "--r", 3, "--out", prefix) == 0
    stats = read_json(tmp_path / "ex10_3.json")
    checks = {c["name"]: c["computed"] for c in stats["checks"]}
    assert checks["min_codegree"] == 5
    assert checks["largest_mono_component"] == 7
    G = read_hypergraph(tmp_path / "ex10_3.hg")
    chi = read_coloring(tmp_path / "ex10_3.col", G)
    assert largest_mono_component(G, chi)[0] == 7


def test_gen_complete(tmp_path):
    assert run("gen", "complete", "--n", 5, "--k", 3, "--out", tmp_path / "k5") == 0
    G = read_hypergraph(tmp_path / "k5.hg")
    assert G.m == 10


def test_gen_unsupported(tmp_path, capsys):
    assert run("gen", "extremal-example", "--n", 19, "--r", 5, "--out", tmp_path / "x") == 2
    assert "unsupported by construction" in capsys.readouterr().err


def test_gen_missing_parameters(tmp_path):
    assert run("gen", "gyarfas-partition", "--n", 8, "--out", tmp_path / "g") == 2
    assert run("gen", "affine-plane", "--q", 4, "--out", tmp_path / "a") == 2


def test_gen_one_indexed(tmp_path):
    run("gen", "gyarfas-partition", "--n", 8, "--r", 3, "--out", tmp_path / "g",
        "--one-indexed")
    stats = read_json(tmp_path / "g.json")
    assert stats["scheme"]["A1"] == [1, 2]


def test_round_trip_byte_identical(tmp_path):
    for name, params in [("extremal-example", ["--n", 13, "--r", 3]),
                         ("gyarfas-partition", ["--n", 9, "--r", 3]),
                         ("affine-plane", ["--q", 3, "--m", 2])]:
        prefix = tmp_path / name
        assert run("gen", name, *params, "--out", prefix) == 0
        hg = (tmp_path / f"{name}.hg").read_text()
        col = (tmp_path / f"{name}.col").read_text()
        G = read_hypergraph(tmp_path / f"{name}.hg")
        assert dumps_hypergraph(G) == hg
        assert dumps_coloring(read_coloring(tmp_path / f"{name}.col", G)) == col


@pytest.fixture
def files(tmp_path):
    run("gen", "complete", "--n", 5, "--k", 3, "--out", tmp_path / "k5_3")
    run("gen", "complete", "--n", 4, "--k", 2, "--out", tmp_path / "k4")
    run("gen", "extremal-example", "--n", 10, "--r", 3, "--out", tmp_path / "ex10_3")
    return tmp_path


def test_mc_exact(files):
    out = files / "r.json"
    assert run("mc", "--file", files / "k5_3.hg", "--r", 4, "--mode", "exact", "--out", out) == 0
    rep = read_json(out)
    assert rep["value"] == 4 and rep["complete"]
    assert {"value", "complete", "nodes_explored", "witness_file", "seed", "budget"} <= set(rep)
    G = read_hypergraph(files / "k5_3.hg")
    assert largest_mono_component(G, read_coloring(rep["witness_file"], G))[0] == 4


def test_mc_brute(files):
    out = files / "b.json"
    assert run("mc", "--file", files / "k4.hg", "--r", 3, "--mode", "brute", "--out", out) == 0
    rep = read_json(out)
    assert rep["value"] == 2
    G = read_hypergraph(files / "k4.hg")
    assert largest_mono_component(G, read_coloring(rep["witness_file"], G))[0] == 2


def test_mc_heuristic(files):
    out = files / "h.json"
    assert run("mc", "--file", files / "ex10_3.hg", "--r", 4, "--mode", "heuristic",
               "--seed", 3, "--out", out) == 0
    rep = read_json(out)
    assert rep["value"] <= 7 and rep["seed"] == 3 and "budget" in rep


def test_mc_requires_seed(files):
    assert run("mc", "--file", files / "k4.hg", "--r", 3, "--mode", "heuristic") == 2


def test_mc_bounds(files):
    out = files / "bd.json"
    assert run("mc", "--file", files / "ex10_3.hg", "--r", 4, "--mode", "bounds",
               "--seed", 3, "--out", out) == 0
    rep = read_json(out)
    assert rep["lower"] <= rep["upper"] == 7


def test_mc_budget_exhaustion_exit_zero(files):
    out = files / "e.json"
    assert run("mc", "--file", files / "k5_3.hg", "--r", 3, "--mode", "exact",
               "--max-nodes", 1, "--out", out) == 0
    assert "complete" in read_json(out)


def test_mc_bad_file(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 2 2\n0 1\n")
    assert run("mc", "--file", bad, "--r", 2) == 2
    assert run("mc", "--file", tmp_path / "missing.hg", "--r", 2) == 2


def test_verify_range(tmp_path):
    out = tmp_path / "v.json"
    assert run("verify", "--n", "8..12", "--r", 3, "--trials", 1000, "--seed", 42,
               "--out", out) == 0
    rep = read_json(out)
    assert rep["certificates"] == 5000 and rep["failures"] == 0
    assert rep["claim_failures"] == 0
    for row in rep["per_n"]:
        assert row["min_certificate"] >= row["bound"]


def test_verify_small(tmp_path):
    out = tmp_path / "v.json"
    assert run("verify", "--n", 4, "--r", 3, "--trials", 10, "--out", out) == 0
    rep = read_json(out)
    assert rep["per_n"][0]["min_certificate"] >= 3


def test_verify_precondition(files):
    assert run("verify", "--file", files / "ex10_3.hg") == 2
    assert run("verify", "--n", 3, "--r", 3) == 2


def test_verify_file_with_coloring(tmp_path):
    run("gen", "gyarfas-partition", "--n", 9, "--r", 3, "--out", tmp_path / "g")
    out = tmp_path / "v.json"
    assert run("verify", "--file", tmp_path / "g.hg", "--coloring", tmp_path / "g.col",
               "--trials", 5, "--x", "all", "--out", out) == 0
    assert read_json(out)["certificates"] == 6 * 9


def test_scan_complete(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"family": "complete", "n": "8..12", "r": 3}))
    out = tmp_path / "s.csv"
    assert run("scan", "--spec", spec, "--out", out) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 5
    for row in rows:
        n = int(row["n"])
        assert int(row["mc_lower"]) == int(row["mc_upper"]) == -(-3 * n // 4)


def test_scan_extremal(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"family": "extremal-example", "n": [10, 13], "r": 3}))
    out = tmp_path / "s.csv"
    assert run("scan", "--spec", spec, "--out", out, "--no-timing") == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    for row in rows:
        n = int(row["n"])
        assert int(row["delta"]) == -(-3 * n // 4) - 3
        assert int(row["mc_upper"]) == -(-3 * n // 4) - 1
        assert int(row["mc_lower"]) <= int(row["mc_upper"])


def test_scan_empty_grid(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"family": "complete", "n": [], "r": 3}))
    out = tmp_path / "s.csv"
    assert run("scan", "--spec", spec, "--out", out) == 0
    assert out.read_text() == "n,r,k,l,delta,mc_lower,mc_upper,method,seed,runtime_ms\n"


def test_scan_bad_spec(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text("{not json")
    assert run("scan", "--spec", spec) == 2
    spec.write_text(json.dumps({"family": "nope", "n": [5], "r": 3}))
    assert run("scan", "--spec", spec) == 2


def test_scan_deterministic(tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text(json.dumps({"family": "random-min-degree", "n": [8, 9], "r": 3,
                                "targets": [5], "seeds": [1, 2]}))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run("scan", "--spec", spec, "--out", a, "--no-timing")
    run("scan", "--spec", spec, "--out", b, "--no-timing")
    assert a.read_text() == b.read_text()
    rows = list(csv.DictReader(io.StringIO(a.read_text())))
    assert len(rows) == 4
    for row in rows:
        assert int(row["delta"]) >= 5
        assert int(row["mc_lower"]) <= int(row["mc_upper"])
        if row["method"] == "exact":
            assert row["mc_lower"] == row["mc_upper"]


def test_degrees(tmp_path, capsys):
    run("gen", "complete", "--n", 6, "--k", 3, "--out", tmp_path / "k6")
    out = tmp_path / "d.json"
    assert run("degrees", "--file", tmp_path / "k6.hg", "--shadow", 2,
               "--shadow-out", tmp_path / "sh.hg", "--out", out) == 0
    rep = read_json(out)
    assert rep["min_degree"]["2"] == {"value": 4, "witness": [0, 1]}
    assert rep["min_degree"]["0"]["value"] == 20
    assert rep["shadow"]["complete"]
    assert read_hypergraph(tmp_path / "sh.hg").m == 15


def test_degrees_one_indexed(tmp_path):
    G = make_hypergraph(4, 2, [[0, 1], [1, 2]])
    path = tmp_path / "g.hg"
    path.write_text(dumps_hypergraph(G))
    out = tmp_path / "d.json"
    run("degrees", "--file", path, "--l", 1, "--one-indexed", "--out", out)
    assert read_json(out)["min_degree"]["1"] == {"value": 0, "witness": [4]}


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "hypermc", "gen", "complete", "--n", "4",
                           "--k", "2", "--out", str(tmp_path / "k")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    proc = subprocess.run([sys.executable, "-m", "hypermc", "bogus"], capture_output=True)
    assert proc.returncode == 2
