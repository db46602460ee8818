# tests/utils/test_off_reader.py

import io
import os

import numpy as np
import pytest

from tilerscope.errors import MeshIndexError, MeshParseError
from tilerscope.utils import solids
from tilerscope.utils.off_reader import dump_mesh, parse_mesh

HERE = os.path.dirname(__file__)
MESH_DIR = os.path.abspath(os.path.join(HERE, "..", "..", "sample_meshes"))

TRIANGLE_SOUP = """OFF
4 4 6
0 0 0
1 0 0
0 1 0
0 0 1
3 0 1 2
3 0 1 3
3 0 2 3
3 1 2 3
"""


def parse_text(text):
    return parse_mesh(io.StringIO(text))


def test_sample_cube():
    vertices, facets = parse_mesh(os.path.join(MESH_DIR, "cube.off"))
    assert vertices.shape == (8, 3)
    assert len(facets) == 6
    assert all(len(cycle) == 4 for cycle in facets)


@pytest.mark.parametrize("name", sorted(solids.CORPUS))
def test_sample_meshes_match_the_solids(name):
    vertices, facets = parse_mesh(os.path.join(MESH_DIR, f"{name}.off"))
    expected, _ = solids.CORPUS[name]()
    assert np.allclose(vertices, expected)


def test_comments_blank_lines_and_inline_counts():
    text = "# a tetrahedron\nOFF 4 4 6\n\n" + TRIANGLE_SOUP.split("\n", 2)[2].replace("1 0 0", "1 0 0  # x axis")
    vertices, facets = parse_text(text)
    assert vertices.shape == (4, 3)
    assert len(facets) == 4


def test_facets_are_turned_outward():
    _, facets = parse_text(TRIANGLE_SOUP)
    # 0 1 2 lies on z = 0 with the body above, so it has to run clockwise from above
    assert facets[0] == (0, 2, 1)


def test_bad_header():
    with pytest.raises(MeshParseError) as info:
        parse_text("PLY\n")
    assert info.value.line == 1


def test_bad_token_reports_its_column():
    with pytest.raises(MeshParseError) as info:
        parse_text(TRIANGLE_SOUP.replace("0 1 0\n", "0 x 0\n"))
    assert (info.value.line, info.value.column) == (5, 3)


def test_non_finite_coordinate():
    with pytest.raises(MeshParseError):
        parse_text(TRIANGLE_SOUP.replace("0 0 1\n", "0 0 inf\n"))


def test_truncated_file():
    with pytest.raises(MeshParseError, match="unexpected end of file"):
        parse_text(TRIANGLE_SOUP.rsplit("3 1 2 3", 1)[0])


def test_count_mismatch():
    with pytest.raises(MeshParseError, match="header count mismatch"):
        parse_text(TRIANGLE_SOUP.replace("4 4 6", "4 3 6"))


def test_facet_length_mismatch():
    with pytest.raises(MeshParseError):
        parse_text(TRIANGLE_SOUP.replace("3 1 2 3", "4 1 2 3"))


def test_small_facet():
    with pytest.raises(MeshParseError):
        parse_text(TRIANGLE_SOUP.replace("3 1 2 3", "2 1 2"))


def test_index_out_of_range():
    with pytest.raises(MeshIndexError) as info:
        parse_text(TRIANGLE_SOUP.replace("3 1 2 3", "3 1 2 4"))
    assert isinstance(info.value, IndexError)
    assert info.value.line == 10


def test_dump_reads_back():
    vertices, facets = solids.triangular_frustum()
    again_vertices, again_facets = parse_text(dump_mesh(vertices, facets))
    assert np.array_equal(again_vertices, vertices)
    assert len(again_facets) == len(facets)
    assert dump_mesh(again_vertices, again_facets).splitlines()[1] == "6 5 9"
