from __future__ import annotations

import json
import subprocess
import sys

import pytest

from spatialdigraph.cli import VOLATILE_FIELDS, InputError, load_manifest, main
from spatialdigraph.constructions import complete_symmetric
from spatialdigraph.fixtures import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    return json.loads(out)


@pytest.fixture
def fixtures_dir(tmp_path):
    for name in ("hopf_triangles", "split_circles", "trefoil_hexagon", "clasp_fixture"):
        (tmp_path / f"{name}.json").write_text(FIXTURES[name]().to_json())
    return tmp_path


@pytest.mark.parametrize("argv, verts, edges", [
    (["three_link_gadget"], 21, 93),
    (["transitive_tournament", "--n", "5"], 5, 10),
    (["dbar4"], 4, 8),
])
def test_gen_examples(capsys, tmp_path, argv, verts, edges):
    out_path = tmp_path / "g.json"
    code, out, _ = run(capsys, "gen", *argv, "--out", str(out_path))
    assert code == 0
    g = json.loads(out_path.read_text())
    assert (len(g["vertices"]), len(g["edges"])) == (verts, edges)
    assert (tmp_path / "g.manifest.json").exists()
    assert report(out)["result"]["vertices"] == verts


def test_gen_writes_wiring_for_gadgets(capsys, tmp_path):
    code, _, _ = run(capsys, "gen", "three_link_gadget", "--out", str(tmp_path / "t.json"))
    assert code == 0
    wiring = json.loads((tmp_path / "t.wiring.json").read_text())
    assert len(wiring["copies"]) == 3 and len(wiring["preferred_edges"]) == 3


def test_gen_unknown_name_is_usage_error(capsys):
    code, out, err = run(capsys, "gen", "nosuch")
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["type"] == "usage"


def test_lk_prints_plus_minus_one(capsys, fixtures_dir):
    code, out, _ = run(capsys, "lk", "--embedding", str(fixtures_dir / "hopf_triangles.json"),
                       "--cycle1", "c1", "--cycle2", "c2")
    assert code == 0 and out.strip() in ("1", "-1")
    code, out, _ = run(capsys, "lk", "--embedding", str(fixtures_dir / "split_circles.json"),
                       "--cycle1", "c1", "--cycle2", "c2", "--direction", "1/7,2/9")
    assert code == 0 and out.strip() == "0"


def test_census_split_is_empty(capsys, fixtures_dir):
    code, out, _ = run(capsys, "census", "--embedding", str(fixtures_dir / "split_circles.json"))
    assert code == 0
    assert report(out)["result"]["links"] == []


def test_census_report_file_and_manifest(capsys, fixtures_dir, tmp_path):
    emb = fixtures_dir / "hopf_triangles.json"
    rep_path = tmp_path / "out.json"
    code, out, _ = run(capsys, "census", "--embedding", str(emb), "--max-n", "3", "--max-len", "9",
                       "--consistent-only", "--report", str(rep_path))
    assert code == 0 and out == ""
    rep = json.loads(rep_path.read_text())
    link = rep["result"]["links"][0]
    assert "linking_matrix" in link and link["components"][0]["vertices"]
    man = rep["manifest"]
    assert man["command"] == "census" and man["seed"] == 0 and str(emb) in man["inputs"]
    assert load_manifest(str(rep_path)).inputs == man["inputs"]
    emb.write_text(emb.read_text() + " ")
    with pytest.raises(InputError):
        load_manifest(str(rep_path))


def test_census_from_graph_is_seeded(capsys, tmp_path):
    g = tmp_path / "k6.json"
    g.write_text(complete_symmetric(5).to_json())
    outs = []
    for seed in ("3", "3", "4"):
        code, out, _ = run(capsys, "census", "--graph", str(g), "--max-len", "3", "--seed", seed)
        assert code == 0
        rep = report(out)
        for k in VOLATILE_FIELDS:
            rep["manifest"].pop(k)
        outs.append(rep)
    assert outs[0] == outs[1]
    assert outs[2]["manifest"]["seed"] == 4


def test_reports_are_byte_identical_up_to_volatile_fields(capsys, fixtures_dir, tmp_path):
    texts = []
    path = tmp_path / "r.json"
    for _ in range(2):
        run(capsys, "census", "--embedding", str(fixtures_dir / "hopf_triangles.json"), "--knots", "--report", str(path))
        rep = json.loads(path.read_text())
        for f in VOLATILE_FIELDS:
            rep["manifest"][f] = None
        texts.append(json.dumps(rep, sort_keys=True))
    assert texts[0] == texts[1]


def test_knot_command(capsys, fixtures_dir):
    code, out, _ = run(capsys, "knot", "--embedding", str(fixtures_dir / "trefoil_hexagon.json"), "--cycle", "k")
    r = report(out)["result"]
    assert code == 0 and (r["determinant"], r["arf"], r["status"]) == (3, 1, "knotted")


def test_double_and_contract(capsys, fixtures_dir, tmp_path):
    d = tmp_path / "d.json"
    code, out, _ = run(capsys, "double", "--embedding", str(fixtures_dir / "hopf_triangles.json"),
                       "--out", str(d), "--verify")
    assert code == 0 and report(out)["result"]["doubling"]["doubled_counts"] == {"2": 4}
    code, out, _ = run(capsys, "census", "--embedding", str(d), "--consistent-only")
    assert report(out)["result"]["counts"] == {"2": 4}
    c = tmp_path / "c.json"
    code, out, _ = run(capsys, "contract", "--embedding", str(d), "--path", "c1.0>c1.1+", "--out", str(c))
    assert code == 0 and report(out)["result"]["vertices"] == 5
    code, _, err = run(capsys, "contract", "--embedding", str(d), "--path", "c1.0>c1.1+,c2.0>c2.1+")
    assert code == 2 and "error" in json.loads(err)


def _write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_minor_check(capsys, tmp_path):
    g = _write(tmp_path / "g.json", complete_symmetric(4).to_dict())
    pat = _write(tmp_path / "p.json", complete_symmetric(2).to_dict())
    good = _write(tmp_path / "good.json", {"blocks": [["1", "2"], ["3", "4"]]})
    code, out, _ = run(capsys, "minor", "check", "--graph", g, "--pattern", pat, "--partition", good, "--mode", "hcyclic")
    assert code == 0 and report(out)["result"]["ok"]
    path = {"vertices": ["1", "2", "3"], "edges": [{"id": "a", "tail": "1", "head": "2"}, {"id": "b", "tail": "2", "head": "3"}]}
    g2 = _write(tmp_path / "g2.json", path)
    one = _write(tmp_path / "one.json", {"vertices": ["x"], "edges": []})
    blk = _write(tmp_path / "blk.json", {"blocks": [["1", "2", "3"]]})
    code, out, _ = run(capsys, "minor", "check", "--graph", g2, "--pattern", one, "--partition", blk, "--mode", "strong")
    assert code == 1 and not report(out)["result"]["ok"]
    bad = _write(tmp_path / "bad.json", {"blocks": [["1", "9"], ["3", "4"]]})
    code, _, err = run(capsys, "minor", "check", "--graph", g, "--pattern", pat, "--partition", bad)
    assert code == 3 and json.loads(err)["error"]["type"] == "input"


def test_density_command(capsys, tmp_path):
    g = _write(tmp_path / "g.json", complete_symmetric(8).to_dict())
    code, out, _ = run(capsys, "density", "--graph", g)
    assert code == 0 and report(out)["result"]["verdict"] == "below_threshold"


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "construction")
    assert code == 0 and report(out)["result"]["ok"]
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2 and json.loads(err)["error"]["type"] == "usage"


def test_error_paths_are_machine_readable(capsys, tmp_path):
    code, _, err = run(capsys, "density", "--graph", str(tmp_path / "missing.json"))
    assert code == 3 and json.loads(err)["error"]["exit_code"] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"],\n "edges": [}')
    code, _, err = run(capsys, "density", "--graph", str(bad))
    e = json.loads(err)["error"]
    assert code == 3 and "line 2" in e["location"]
    bad.write_text('{"vertices": ["a", 5], "edges": []}')
    code, _, err = run(capsys, "density", "--graph", str(bad))
    assert code == 3 and json.loads(err)["error"]["location"].endswith("$.vertices[1]")
    for argv in ([], ["frobnicate"], ["lk", "--cycle1", "c1"], ["census", "--max-n", "x"]):
        code, _, err = run(capsys, *argv)
        assert code == 2 and json.loads(err)["error"]["type"] == "usage"


def test_bad_cycle_and_direction(capsys, fixtures_dir):
    emb = str(fixtures_dir / "hopf_triangles.json")
    code, _, _ = run(capsys, "lk", "--embedding", emb, "--cycle1", "zz", "--cycle2", "c2")
    assert code == 2
    code, _, _ = run(capsys, "lk", "--embedding", emb, "--cycle1", "c1", "--cycle2", "c2", "--direction", "1")
    assert code == 2
    code, _, _ = run(capsys, "lk", "--embedding", emb, "--cycle1", "c1", "--cycle2", "c1")
    assert code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "spatialdigraph", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "0.1.0"
