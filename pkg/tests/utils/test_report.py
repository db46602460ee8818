# tests/utils/test_report.py

import json
import math
import os

import pytest

from tilerscope.config import SearchParams
from tilerscope.main import analyze_mesh
from tilerscope.utils.off_reader import parse_mesh
from tilerscope.utils.report import emit_report, mesh_digest, serialize

HERE = os.path.dirname(__file__)
MESH_DIR = os.path.abspath(os.path.join(HERE, "..", "..", "sample_meshes"))
PARAMS = SearchParams(budget=300, workers=2)


@pytest.fixture(scope="module")
def cube_report():
    _, _, report = analyze_mesh(os.path.join(MESH_DIR, "cube.off"), PARAMS)
    return json.loads(emit_report(report))


def test_cube_report(cube_report):
    assert cube_report["verdict"]["outcome"] == "not_universal"
    assert cube_report["verdict"]["combinatorial_reason"] == "counting_violation_cube_type"
    witness = cube_report["witness"]
    assert witness["section"]["edges"] == 6
    assert len(witness["section"]["vertices"]) == 6
    assert witness["failure"] == "no_equal_opposite_edges"
    assert witness["provenance"]["sampler"] == "corner"
    assert sorted(witness["metrics"]["edge_lengths"]) == pytest.approx(
        [0.25 * math.sqrt(2)] * 3 + [0.75 * math.sqrt(2)] * 3
    )
    assert witness["metrics"]["angles_deg"] == pytest.approx([120.0] * 6)
    assert cube_report["validation"] == {"valid": True, "v": 8, "e": 12, "f": 6}
    assert cube_report["parameters"]["budget"] == 300


def test_tetrahedron_report():
    _, verdict, report = analyze_mesh(os.path.join(MESH_DIR, "tetrahedron.off"), PARAMS)
    doc = json.loads(emit_report(report))
    assert doc["verdict"] == {"outcome": "certified_universal", "certificate": "tetrahedron_all_sections"}
    assert "witness" not in doc
    assert doc["screen"]["tag"] == "tetrahedron"


def test_reports_are_byte_identical():
    path = os.path.join(MESH_DIR, "octahedron.off")
    first = emit_report(analyze_mesh(path, PARAMS)[2])
    second = emit_report(analyze_mesh(path, SearchParams(budget=300, workers=5))[2])
    assert first == second
    assert first.endswith(b"\n")


def test_digest_ignores_formatting():
    vertices, facets = parse_mesh(os.path.join(MESH_DIR, "cube.off"))
    digest = mesh_digest(vertices, facets)
    assert digest["vertices"] == 8
    assert len(digest["sha256"]) == 64
    assert digest == mesh_digest(*parse_mesh(os.path.join(MESH_DIR, "cube.off")))


def test_text_format():
    doc = {"b": {"y": 1.5, "x": [1, 2]}, "a": "z", "c": [{"k": True}]}
    assert serialize(doc, "text") == b'a: "z"\nb.x: [1, 2]\nb.y: 1.5\nc[0].k: true\n'


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize({}, "yaml")
