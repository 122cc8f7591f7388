from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import pytest

from pactop.cli import parse, serialize

EXAMPLE = str(resources.files("pactop").joinpath("data/example48.json"))


def run_cli(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "pactop", *args]
    return subprocess.run(cmd, capture_output=True, text=True, timeout=60)


def example_doc() -> dict:
    with open(EXAMPLE, encoding="utf-8") as fh:
        return json.load(fh)


def test_report_passes_and_output_is_stable():
    first = run_cli("report", EXAMPLE, "--format", "json")
    second = run_cli("report", EXAMPLE, "--format", "json")
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["overall"] == "pass"
    assert payload["data"]["separation"] == {"t0": True, "t1": False, "t2": False}
    assert len(payload["data"]["classes"]) == 4


def test_report_text_format():
    res = run_cli("report", EXAMPLE)
    assert res.returncode == 0
    assert res.stdout.rstrip().endswith("OVERALL PASS")


def test_validate_passes():
    res = run_cli("validate", EXAMPLE, "--format", "json")
    assert res.returncode == 0


def test_mutated_document_fails_with_named_witness(tmp_path):
    doc = example_doc()
    doc["maps"]["1"]["v"] = "x0"
    bad = tmp_path / "mutated.json"
    bad.write_text(json.dumps(doc))
    res = run_cli("validate", str(bad))
    assert res.returncode == 1
    assert "OVERALL FAIL" in res.stdout
    assert "[fail] each map is a bijection onto its range set" in res.stdout
    assert "witness=" in res.stdout


def test_malformed_json_exits_2(tmp_path):
    bad = tmp_path / "garbage.json"
    bad.write_text("{not json at all")
    res = run_cli("validate", str(bad))
    assert res.returncode == 2
    assert "error:" in res.stderr


def test_schema_error_exits_2(tmp_path):
    doc = example_doc()
    del doc["maps"]
    bad = tmp_path / "nomap.json"
    bad.write_text(json.dumps(doc))
    res = run_cli("validate", str(bad))
    assert res.returncode == 2
    assert "/maps" in res.stderr


def test_identity_domain_must_be_full(tmp_path):
    doc = example_doc()
    doc["domains"]["0"] = ["v"]
    bad = tmp_path / "idgap.json"
    bad.write_text(json.dumps(doc))
    res = run_cli("validate", str(bad))
    assert res.returncode == 2
    assert "/domains/0" in res.stderr


def test_missing_file_exits_2(tmp_path):
    res = run_cli("validate", str(tmp_path / "absent.json"))
    assert res.returncode == 2


def test_unknown_command_exits_2():
    res = run_cli("frobnicate", EXAMPLE)
    assert res.returncode == 2


def test_unknown_point_in_set_exits_2():
    res = run_cli("vaught", EXAMPLE, "--set", "bogus")
    assert res.returncode == 2
    assert "--set" in res.stderr


def test_vaught_vacuous_star():
    res = run_cli(
        "vaught", EXAMPLE, "--set", "", "--open-g", "1", "--kind", "star",
        "--format", "json",
    )
    assert res.returncode == 0, res.stderr
    payload = json.loads(res.stdout)
    assert payload["data"]["result"] == ["x0"]
    assert payload["data"]["group-part"] == [1]


def test_vaught_delta_full():
    res = run_cli(
        "vaught", EXAMPLE, "--set", "x0,v", "--open-g", "all", "--format", "json"
    )
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["data"]["result"] == ["x0", "v"]


def test_orbits_output():
    res = run_cli("orbits", EXAMPLE, "--format", "json")
    assert res.returncode == 0
    points = json.loads(res.stdout)["data"]["points"]
    assert points["x0"] == {
        "orbit": ["x0"], "stabilizer": [0], "acting-set": [0]
    }
    assert points["v"] == {
        "orbit": ["v"], "stabilizer": [0, 1, 2], "acting-set": [0, 1, 2]
    }


def test_globalize_dot_export(tmp_path):
    out = tmp_path / "envelope.dot"
    res = run_cli("globalize", EXAMPLE, "--dot", str(out), "--format", "json")
    assert res.returncode == 0
    text = out.read_text()
    assert text.startswith("digraph envelope {")
    assert "cluster_specialization" in text
    assert "cluster_translations" in text
    assert 'q1 [label="(0,v)"]' in text
    # translating the identity-slice basepoint lands in the slice of 1
    assert 'a0 -> a2 [label="1"]' in text
    payload = json.loads(res.stdout)
    assert payload["data"]["dot"] == str(out)


def test_selector_command():
    res = run_cli("selector", EXAMPLE, "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)["data"]
    assert data["classes"] == ["(0,x0)", "(0,v)", "(1,x0)", "(2,x0)"]
    assert data["transversal"] == ["(0,x0)", "(0,v)", "(1,x0)", "(2,x0)"]
    assert len(data["tau-opens"]) == 12
    assert data["discontinuities"] == [
        {"element": 1, "class": "(0,x0)"},
        {"element": 2, "class": "(0,x0)"},
    ]


def test_parse_serialize_round_trip():
    with open(EXAMPLE, "rb") as fh:
        spec = parse(fh.read())
    doc = serialize(spec)
    again = parse(json.dumps(doc))
    assert again == spec
    assert serialize(again) == doc


def test_parse_rejects_unknown_key():
    doc = example_doc()
    doc["extra"] = 1
    with pytest.raises(Exception) as exc:
        parse(json.dumps(doc))
    assert "/extra" in str(exc.value)
