# tests/test_main.py

import json
import os

import networkx as nx
import pytest

from tilerscope.main import EXIT_INPUT_ERROR, main, parse_plane
from tilerscope.errors import ConfigError

HERE = os.path.dirname(__file__)
MESH_DIR = os.path.abspath(os.path.join(HERE, "..", "sample_meshes"))


def mesh(name):
    return os.path.join(MESH_DIR, f"{name}.off")


def run(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    captured = capsys.readouterr()
    return info.value.code, captured.out, captured.err


def test_verify_cube(capsys, tmp_path):
    svg = tmp_path / "witness.svg"
    code, out, _ = run(["verify", mesh("cube"), "--budget", "200", "--svg-out", str(svg)], capsys)
    doc = json.loads(out)
    assert code == 1
    assert doc["verdict"]["outcome"] == "not_universal"
    assert doc["witness"]["section"]["edges"] == 6
    assert svg.read_bytes().lstrip().startswith(b"<?xml")


def test_verify_tetrahedron(capsys):
    code, out, _ = run(["verify", mesh("tetrahedron")], capsys)
    assert code == 0
    assert json.loads(out)["verdict"]["certificate"] == "tetrahedron_all_sections"


def test_verify_quad_pyramid_is_unresolved(capsys, tmp_path):
    svg = tmp_path / "none.svg"
    code, out, _ = run(
        ["verify", mesh("quad_pyramid"), "--budget", "100", "--workers", "2", "--svg-out", str(svg)], capsys
    )
    doc = json.loads(out)
    assert code == 2
    assert doc["coverage"]["total_planes"] == 100
    assert not svg.exists()


def test_verify_text_format(capsys):
    code, out, _ = run(["verify", mesh("frustum"), "--format", "text"], capsys)
    assert code == 0
    assert 'verdict.certificate: "pentahedron_parallel_facets"' in out.splitlines()


def test_screen(capsys, tmp_path):
    graphml = tmp_path / "octahedron.graphml"
    code, out, _ = run(["screen", mesh("octahedron"), "--graphml-out", str(graphml)], capsys)
    doc = json.loads(out)
    assert code == 1
    assert doc["screen"]["tag"] == "inadmissible_valence_set"
    assert doc["graph"]["0"]["valence"] == 4
    assert nx.read_graphml(graphml).number_of_edges() == 12

    code, out, _ = run(["screen", mesh("triangular_prism")], capsys)
    assert code == 0
    assert json.loads(out)["screen"]["tag"] == "triangular_base_pentahedron"


@pytest.mark.parametrize("name,plane,code,edges", [
    ("cube", "1,1,1,1.25", 1, 6),
    ("cube", "1,1,1,1.5", 0, 6),
    ("cube", "0,0,1,0.5", 0, 4),
    ("cube", "0,0,1,2", 2, 0),
    ("hexagonal_prism", "-0.9,0,1,0.5", 1, 8),
])
def test_section(capsys, name, plane, code, edges):
    got, out, _ = run(["section", mesh(name), f"--plane={plane}"], capsys)
    doc = json.loads(out)
    assert got == code
    assert doc["section"]["edges"] == edges


def test_section_svg(capsys, tmp_path):
    svg = tmp_path / "hexagon.svg"
    code, _, _ = run(["section", mesh("cube"), "--plane", "1,1,1,1.25", "--svg-out", str(svg)], capsys)
    assert code == 1
    assert b"1.06066" in svg.read_bytes()


def test_missing_file(capsys):
    code, _, err = run(["verify", mesh("dodecahedron")], capsys)
    assert code == EXIT_INPUT_ERROR
    assert err.startswith("Error:")


def test_broken_mesh(capsys, tmp_path):
    path = tmp_path / "broken.off"
    path.write_text("OFF\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 9\n")
    code, _, err = run(["screen", str(path)], capsys)
    assert code == EXIT_INPUT_ERROR
    assert "line 10" in err


def test_non_convex_mesh(capsys, tmp_path):
    path = tmp_path / "dented.off"
    path.write_text(
        "OFF\n5 6 9\n0 0 0\n1 0 0\n0 1 0\n0.2 0.2 1\n0.2 0.2 0.3\n"
        "3 0 1 3\n3 1 2 3\n3 2 0 3\n3 0 1 4\n3 1 2 4\n3 2 0 4\n"
    )
    code, _, _ = run(["screen", str(path)], capsys)
    assert code == EXIT_INPUT_ERROR


def test_bad_arguments(capsys):
    assert run(["section", mesh("cube"), "--plane", "1,2,3"], capsys)[0] == EXIT_INPUT_ERROR
    assert run(["verify", mesh("cube"), "--budget", "0"], capsys)[0] == EXIT_INPUT_ERROR
    assert run(["verify", mesh("cube"), "--no-such-flag"], capsys)[0] == EXIT_INPUT_ERROR


def test_no_command_prints_help(capsys):
    main([])
    assert "verify" in capsys.readouterr().out


def test_parse_plane():
    plane = parse_plane("0,0,2,1")
    assert plane.coefficients() == pytest.approx((0, 0, 1, 0.5))
    with pytest.raises(ConfigError):
        parse_plane("a,b,c,d")
