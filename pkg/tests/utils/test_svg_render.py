# tests/utils/test_svg_render.py

import pytest

from tilerscope.geometry.polyhedron import validate_polyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import cross_section
from tilerscope.utils import solids
from tilerscope.utils.svg_render import angle_labels, length_labels, render_section_svg


@pytest.fixture(scope="module")
def cube():
    return validate_polyhedron(*solids.unit_cube())


@pytest.fixture(scope="module")
def corner_hexagon(cube):
    return cross_section(cube, Plane.from_coefficients(1, 1, 1, 1.25))


def test_hexagon_labels(corner_hexagon):
    assert sorted(set(length_labels(corner_hexagon))) == ["0.353553", "1.06066"]
    assert set(angle_labels(corner_hexagon)) == {"120.0°"}


def test_svg_carries_the_labels(corner_hexagon):
    svg = render_section_svg(corner_hexagon, title="corner").decode("utf-8")
    assert svg.lstrip().startswith("<?xml")
    assert "1.06066" in svg
    assert "0.353553" in svg
    assert "120.0°" in svg
    assert "corner" in svg


def test_square_and_triangle(cube):
    square = cross_section(cube, Plane.from_coefficients(0, 0, 1, 0.5))
    assert length_labels(square) == ["1"] * 4
    assert angle_labels(square) == ["90.0°"] * 4
    triangle = cross_section(cube, Plane.from_coefficients(1, 1, 1, 0.5))
    assert angle_labels(triangle) == ["60.0°"] * 3


def test_rendering_is_deterministic(corner_hexagon):
    assert render_section_svg(corner_hexagon) == render_section_svg(corner_hexagon)


def test_drawn_labels_match_the_helpers(cube):
    rectangle = cross_section(cube, Plane.from_coefficients(1, 2, 0, 2.5))
    svg = render_section_svg(rectangle).decode("utf-8")
    labels = length_labels(rectangle) + angle_labels(rectangle)
    for label in set(labels):
        assert svg.count(f">{label}</text>") == labels.count(label)
