from __future__ import annotations

import json

import pytest

from segue import read_layout_csv
from segue.cli import main
from segue.service import create_app

from conftest import make_document

PROFILE = {
    "num_nodes": 12,
    "num_time_steps": 10,
    "attribute_weights": {"CEO": 1, "Employee": 5},
    "archetypes": {"stable-small": 6, "fluctuating": 6},
}

EVENT_TYPES = [
    {"name": "busy", "series": "size", "kind": "value_range", "lo": 2, "hi": None},
    {"name": "rise", "series": "size", "kind": "slope_range", "lo": 0.24,
     "hi": None},
]


@pytest.fixture()
def dataset_path(tmp_path):
    doc = make_document(
        num_time_steps=3,
        nodes=[("a", "CEO"), ("b", "Employee"), ("c", "Employee")],
        edges=[("a", "b", 0), ("a", "c", 0), ("b", "c", 1)],
    )
    path = tmp_path / "net.json"
    path.write_text(json.dumps(doc))
    return path


@pytest.fixture()
def spec_path(tmp_path):
    path = tmp_path / "etypes.json"
    path.write_text(json.dumps(EVENT_TYPES))
    return path


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "segue" in capsys.readouterr().out


def test_ingest_summary(dataset_path, capsys):
    assert main(["ingest", str(dataset_path)]) == 0
    out = capsys.readouterr().out
    assert "nodes: 3" in out
    assert "edges: 3" in out


def test_ingest_canonical_json(dataset_path, capsys):
    assert main(["ingest", str(dataset_path), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [n["id"] for n in doc["nodes"]] == ["a", "b", "c"]


def test_ingest_reports_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"num_time_steps": 0}))
    assert main(["ingest", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_deterministic(tmp_path):
    profile = tmp_path / "profile.json"
    profile.write_text(json.dumps(PROFILE))
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["gen", "--profile", str(profile), "--seed", "7",
                 "--out", str(out1)]) == 0
    assert main(["gen", "--profile", str(profile), "--seed", "7",
                 "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert len(doc["nodes"]) == 12


def test_run_writes_layout_csv(dataset_path, spec_path, tmp_path):
    out = tmp_path / "layout.csv"
    assert main([
        "run", "--dataset", str(dataset_path), "--event-types", str(spec_path),
        "--metric", "euclidean", "--out", str(out),
    ]) == 0
    ids, coords = read_layout_csv(out.read_text())
    assert ids == ("a", "b", "c")
    assert coords.shape == (3, 2)


def test_export_matrix_csv(dataset_path, spec_path, tmp_path, capsys):
    out = tmp_path / "matrix.csv"
    assert main([
        "export-matrix", "--dataset", str(dataset_path), "--event-types",
        str(spec_path), "--metric", "edit", "--out", str(out),
    ]) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "id,a,b,c"
    assert len(rows) == 4


def test_cli_and_http_exports_are_identical(dataset_path, spec_path, tmp_path):
    from fastapi.testclient import TestClient

    out = tmp_path / "layout.csv"
    main([
        "run", "--dataset", str(dataset_path), "--event-types", str(spec_path),
        "--metric", "euclidean", "--out", str(out),
    ])

    client = TestClient(create_app())
    sid = client.post(
        "/sessions", json=json.loads(dataset_path.read_text())
    ).json()["session_id"]
    for spec in EVENT_TYPES:
        client.post(f"/sessions/{sid}/event-types", json=spec)
    client.post(f"/sessions/{sid}/metric", json={"metric": "euclidean"})
    http_text = client.get(
        f"/sessions/{sid}/export/layout", params={"format": "csv"}
    ).text
    assert http_text == out.read_text()
