import json
import subprocess
import sys

import pytest

from k4graph.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_table(capsys):
    code, out, _ = run_cli(["catalog", "--format", "table"], capsys)
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("[")]
    assert len(rows) == 75


def test_catalog_json_round_trip(capsys):
    code, out, _ = run_cli(["catalog", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "k4graph/1"
    assert len(payload["catalog"]) == 75
    entry = next(e for e in payload["catalog"] if e["id"] == "[7S]")
    assert (entry["r"], entry["d"], entry["type"]) == (17, 5, "II")
    assert (entry["s"], entry["t"]) == (2, 3)
    assert json.loads(json.dumps(payload)) == payload


def test_catalog_rejects_unknown_format():
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--format", "xml"])
    assert exc.value.code == 2


def test_build_k4_json(capsys):
    code, out, err = run_cli(["build", "--graph", "k4", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert len(payload["vertices"]) == 75
    assert "vertices=75 edges=126 irregular=irr" in err


def test_build_k3_dot(capsys):
    code, out, err = run_cli(["build", "--graph", "k3", "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("digraph k3 {")
    assert out.rstrip().endswith("}")
    assert out.count("->") == 126
    assert "irregular=[8S]_I" in err


def test_build_summaries_differ_in_one_vertex_two_edges(capsys):
    _, out3, _ = run_cli(["build", "--graph", "k3", "--format", "json"], capsys)
    _, out4, _ = run_cli(["build", "--graph", "k4", "--format", "json"], capsys)
    g3, g4 = json.loads(out3), json.loads(out4)
    v3 = {v["id"] for v in g3["vertices"]}
    v4 = {v["id"] for v in g4["vertices"]}
    assert v3 - v4 == {"[8S]_I"}
    assert v4 - v3 == {"irr"}
    e3 = {(e["from"], e["to"], e["class"]) for e in g3["edges"]}
    e4 = {(e["from"], e["to"], e["class"]) for e in g4["edges"]}
    assert e3 - e4 == {("[7S]", "[8S]_I", "wu")}
    assert e4 - e3 == {("[3S]", "irr", "wu")}


def test_export_writes_file(tmp_path, capsys):
    out_file = tmp_path / "k3.json"
    code, out, _ = run_cli(
        ["export", "--graph", "k3", "--format", "json", "--out", str(out_file)], capsys
    )
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["kind"] == "k3"
    assert "vertices=75" in out


def test_determinism_byte_for_byte(tmp_path):
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code = main(["build", "--graph", "k4", "--format", "json", "--out", str(path)])
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_classify_output(capsys):
    code, out, _ = run_cli(["classify", "--vertex", "[7S]", "--square", "-2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].endswith("odd: no")
    assert "wu: yes" in lines[1] and "witness=" in lines[1]


def test_classify_with_search_bound(capsys):
    code, out, _ = run_cli(
        ["classify", "--vertex", "[7S]", "--square", "-2", "--bound", "2"], capsys
    )
    assert code == 0
    assert "witness=[1, 1, 1, 1, 1]" in out


def test_classify_unknown_vertex(capsys):
    code, _, err = run_cli(["classify", "--vertex", "[99S]", "--square", "-2"], capsys)
    assert code == 2
    assert "unknown vertex" in err


def test_classify_rejects_bad_square():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--vertex", "[7S]", "--square", "5"])
    assert exc.value.code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(["verify", "--suite", "catalog"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("catalog")
    assert "pass" in out


def test_cli_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "k4graph.cli", "catalog", "--format", "table"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.count("\n") >= 75
