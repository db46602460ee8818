# tests/search/test_constructions.py

import math

import numpy as np
import pytest

from tilerscope.errors import DegeneratePolygon, EpsilonTooLarge, GeometryError, IndexOutOfRange, WrongValence
from tilerscope.geometry.polyhedron import validate_polyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import OnEdge, SectionPolygon, cross_section, is_proper
from tilerscope.search.constructions import (
    chord_rotation_sample,
    construct_shave_plane,
    corner_hexagon_plane,
    corner_offset_bound,
    expected_shave_edges,
)
from tilerscope.tiling.classifier import TWO_PI_THIRDS, has_equal_opposite_edges
from tilerscope.tiling.metrics import count_angles, polygon_metrics
from tilerscope.config import default_epsilon_steps
from tilerscope.utils import solids

SHAVE_SOLIDS = ["cube", "tetrahedron", "octahedron", "quad_pyramid", "triangular_prism"]


@pytest.fixture(scope="module")
def corpus():
    return {name: validate_polyhedron(*make()) for name, make in solids.CORPUS.items()}


@pytest.fixture(scope="module")
def mid_hexagon(corpus):
    return cross_section(corpus["cube"], Plane.from_coefficients(1, 1, 1, 1.5))


def corner_angle(section, k):
    v = section.vertices
    a, b = v[(k - 1) % section.n] - v[k], v[(k + 1) % section.n] - v[k]
    return math.acos(float(np.clip(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)), -1.0, 1.0)))


@pytest.mark.parametrize("name", SHAVE_SOLIDS)
def test_shave_section_has_predicted_edge_count(corpus, name):
    P = corpus[name]
    for facet, cycle in enumerate(P.facets):
        for h in range(len(cycle)):
            section = cross_section(P, construct_shave_plane(P, facet, h))
            assert isinstance(section, SectionPolygon)
            assert section.n == expected_shave_edges(P, facet, h), (name, facet, h)


def test_shave_counts_per_solid(corpus):
    assert cross_section(corpus["cube"], construct_shave_plane(corpus["cube"], 0, 0)).n == 5
    assert cross_section(corpus["octahedron"], construct_shave_plane(corpus["octahedron"], 3, 1)).n == 6
    assert cross_section(corpus["tetrahedron"], construct_shave_plane(corpus["tetrahedron"], 2, 2)).n == 4


def test_shave_plane_with_golden_fractions(corpus):
    P = corpus["octahedron"]
    section = cross_section(P, construct_shave_plane(P, 0, 0, fractions=(0.382, 0.618)))
    assert section.n == 6


def test_shave_plane_argument_errors(corpus):
    cube = corpus["cube"]
    with pytest.raises(IndexOutOfRange):
        construct_shave_plane(cube, 0, 4)
    with pytest.raises(IndexOutOfRange):
        construct_shave_plane(cube, 6, 0)
    with pytest.raises(ValueError):
        construct_shave_plane(cube, 0, 0, fractions=(0.0, 0.5))


def test_cube_corner_plane(corpus):
    cube = corpus["cube"]
    delta, normal, height = corner_offset_bound(cube, 0)
    assert delta == pytest.approx(0.5)
    assert height == pytest.approx(1 / math.sqrt(3))
    plane = corner_hexagon_plane(cube, 0, 0.25)
    assert plane.normal == pytest.approx((1 / math.sqrt(3),) * 3)
    assert plane.offset * math.sqrt(3) == pytest.approx(1.25)
    lengths = sorted(cross_section(cube, plane).edge_lengths())
    assert lengths[:3] == pytest.approx([0.25 * math.sqrt(2)] * 3, abs=1e-9)
    assert lengths[3:] == pytest.approx([0.75 * math.sqrt(2)] * 3, abs=1e-9)


def test_corner_short_edges_shrink_with_epsilon(corpus):
    cube = corpus["cube"]
    for epsilon in (0.1, 0.01, 0.001):
        lengths = sorted(cross_section(cube, corner_hexagon_plane(cube, 7, epsilon)).edge_lengths())
        assert lengths[:3] == pytest.approx([epsilon * math.sqrt(2)] * 3, abs=1e-9)
        assert lengths[3:] == pytest.approx([(1 - epsilon) * math.sqrt(2)] * 3, abs=1e-9)


def test_corner_plane_errors(corpus):
    with pytest.raises(WrongValence):
        corner_hexagon_plane(corpus["octahedron"], 0, 0.1)
    with pytest.raises(EpsilonTooLarge):
        corner_hexagon_plane(corpus["tetrahedron"], 0, 0.01)
    with pytest.raises(EpsilonTooLarge):
        corner_hexagon_plane(corpus["cube"], 0, 0.5)
    with pytest.raises(ValueError):
        corner_hexagon_plane(corpus["cube"], 0, 0.0)
    with pytest.raises(IndexOutOfRange):
        corner_hexagon_plane(corpus["cube"], 8, 0.1)


def test_chord_rotation_bends_the_middle_angle(corpus, mid_hexagon):
    cube = corpus["cube"]
    section = cross_section(cube, chord_rotation_sample(cube, mid_hexagon, 1, 3, 0.01))
    assert section.n == 6
    assert is_proper(section)
    edges = {inc.edge for inc in section.incidences}
    assert edges == {inc.edge for inc in mid_hexagon.incidences}
    assert count_angles(polygon_metrics(section), TWO_PI_THIRDS) < 6


def test_chord_rotation_changes_angle_for_most_steps(corpus, mid_hexagon):
    cube = corpus["cube"]
    target = mid_hexagon.vertices[2]
    unchanged = 0
    for epsilon in default_epsilon_steps():
        section = cross_section(cube, chord_rotation_sample(cube, mid_hexagon, 1, 3, epsilon))
        k = int(np.argmin(np.linalg.norm(section.vertices - target, axis=1)))
        if abs(corner_angle(section, k) - TWO_PI_THIRDS) < cube.tolerance.eps_angle:
            unchanged += 1
    assert unchanged <= 2


def test_zero_rotation_is_identity(corpus, mid_hexagon):
    assert chord_rotation_sample(corpus["cube"], mid_hexagon, 0, 3, 0.0) is mid_hexagon.carrier


def test_square_survives_a_small_rotation(corpus):
    cube = corpus["cube"]
    square = cross_section(cube, Plane.from_coefficients(0, 0, 1, 0.5))
    rotated = cross_section(cube, chord_rotation_sample(cube, square, 0, 1, 0.01))
    assert rotated.n == 4
    assert all(isinstance(inc, OnEdge) for inc in rotated.incidences)
    assert {inc.edge for inc in rotated.incidences} == {inc.edge for inc in square.incidences}


def test_chord_rotation_argument_errors(corpus, mid_hexagon):
    cube = corpus["cube"]
    with pytest.raises(ValueError):
        chord_rotation_sample(cube, mid_hexagon, 2, 2, 0.01)
    with pytest.raises(IndexOutOfRange):
        chord_rotation_sample(cube, mid_hexagon, 0, 6, 0.01)
    with pytest.raises(ValueError):
        chord_rotation_sample(cube, mid_hexagon, 0, 2, 0.01, direction=2)
    facet = cross_section(cube, Plane.from_coefficients(0, 0, 1, 1))
    with pytest.raises(GeometryError):
        chord_rotation_sample(cube, facet, 0, 2, 0.01)


def opposite_edges_differ(section, eps_len):
    L = section.edge_lengths()
    return min(abs(L[i] - L[i + 3]) for i in range(3)) > eps_len


def test_opposite_edge_test_over_cube_corner_family(corpus):
    cube = corpus["cube"]
    eps_len = cube.tolerance.eps_len
    checked = 0
    for w in range(cube.v):
        for epsilon in default_epsilon_steps():
            hexagon = cross_section(cube, corner_hexagon_plane(cube, w, epsilon))
            assert hexagon.n == 6
            assert opposite_edges_differ(hexagon, eps_len)
            assert not has_equal_opposite_edges(polygon_metrics(hexagon))
            for i in range(6):
                rotated = cross_section(cube, chord_rotation_sample(cube, hexagon, i, (i + 2) % 6, epsilon))
                if not isinstance(rotated, SectionPolygon) or rotated.n != 6:
                    continue
                try:
                    metrics = polygon_metrics(rotated)
                except DegeneratePolygon:
                    continue
                assert has_equal_opposite_edges(metrics) != opposite_edges_differ(rotated, eps_len)
                checked += 1
    assert checked > 0
