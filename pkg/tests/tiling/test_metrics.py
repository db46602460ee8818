# tests/tiling/test_metrics.py

import math

import numpy as np
import pytest

from tilerscope.errors import DegeneratePolygon
from tilerscope.geometry.polyhedron import validate_polyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import cross_section
from tilerscope.tiling.classifier import TWO_PI_THIRDS
from tilerscope.tiling.metrics import count_angles, has_parallel_edge_pair, planar_points, polygon_metrics
from tilerscope.utils import solids

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def regular_polygon(n, radius=1.0):
    return [(radius * math.cos(2 * math.pi * k / n), radius * math.sin(2 * math.pi * k / n)) for k in range(n)]


@pytest.fixture(scope="module")
def cube():
    return validate_polyhedron(*solids.unit_cube())


def test_unit_square():
    m = polygon_metrics(SQUARE)
    assert m.n == 4
    assert m.edge_lengths == pytest.approx((1, 1, 1, 1))
    assert m.angles == pytest.approx((math.pi / 2,) * 4)


def test_clockwise_input_is_reordered():
    m = polygon_metrics(list(reversed(SQUARE)))
    assert m.angles == pytest.approx((math.pi / 2,) * 4)
    assert planar_points(list(reversed(SQUARE))).tolist() == [[0, 0], [1, 0], [1, 1], [0, 1]]


def test_regular_cube_hexagon(cube):
    m = polygon_metrics(cross_section(cube, Plane.from_coefficients(1, 1, 1, 1.5)))
    assert m.edge_lengths == pytest.approx((math.sqrt(2) / 2,) * 6)
    assert m.angles == pytest.approx((TWO_PI_THIRDS,) * 6)


def test_corner_cube_hexagon(cube):
    m = polygon_metrics(cross_section(cube, Plane.from_coefficients(1, 1, 1, 1.25)))
    long_side, short_side = 0.75 * math.sqrt(2), 0.25 * math.sqrt(2)
    first = m.edge_lengths[0]
    expected = [long_side, short_side] * 3 if first > 0.5 else [short_side, long_side] * 3
    assert m.edge_lengths == pytest.approx(expected, abs=1e-12)
    assert count_angles(m, TWO_PI_THIRDS) == 6


def test_three_dimensional_points():
    m = polygon_metrics([(0, 0, 0), (1, 0, 1), (1, 1, 1), (0, 1, 0)])
    assert m.edge_lengths == pytest.approx((math.sqrt(2), 1, math.sqrt(2), 1))


def test_count_angles():
    assert count_angles(polygon_metrics(regular_polygon(6)), TWO_PI_THIRDS) == 6
    assert count_angles(polygon_metrics(SQUARE), TWO_PI_THIRDS) == 0


def test_zero_length_edge():
    with pytest.raises(DegeneratePolygon):
        polygon_metrics([(0, 0), (1, 0), (1, 0), (0, 1)])


def test_straight_angle():
    with pytest.raises(DegeneratePolygon):
        polygon_metrics([(0, 0), (1, 0), (2, 0), (1, 1)])


def test_reflex_vertex():
    with pytest.raises(DegeneratePolygon):
        polygon_metrics([(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)])


def test_too_few_points():
    with pytest.raises(DegeneratePolygon):
        polygon_metrics([(0, 0), (1, 0)])


def test_parallel_edges():
    assert has_parallel_edge_pair(SQUARE)
    assert not has_parallel_edge_pair(regular_polygon(3))
    truncated = [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]
    assert has_parallel_edge_pair(truncated)
    assert not has_parallel_edge_pair(regular_polygon(5))


def test_parallel_edges_from_metrics_agrees_with_geometry():
    rng = np.random.default_rng(5)
    for _ in range(50):
        angles = np.sort(rng.uniform(0, 2 * math.pi, size=5))
        if np.min(np.diff(np.append(angles, angles[0] + 2 * math.pi))) < 0.3:
            continue
        pts = np.column_stack([np.cos(angles), np.sin(angles)])
        assert has_parallel_edge_pair(polygon_metrics(pts)) == has_parallel_edge_pair(pts)
    truncated = [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]
    assert has_parallel_edge_pair(polygon_metrics(truncated))


def test_relabeling_keeps_edges_between_their_angles():
    m = polygon_metrics([(0, 0), (3, 0), (3.5, 1), (2, 2.5), (-0.5, 1.5)])
    for rotation in range(5):
        for reflected in (False, True):
            r = m.relabeled(rotation, reflected)
            assert sorted(r.edge_lengths) == pytest.approx(sorted(m.edge_lengths))
            assert sum(r.angles) == pytest.approx(3 * math.pi)
    mirrored = m.relabeled(0, True)
    # vertex 0 keeps its angle; its outgoing edge becomes the old incoming one
    assert mirrored.angles[0] == pytest.approx(m.angles[0])
    assert mirrored.edge_lengths[0] == pytest.approx(m.edge_lengths[-1])
    assert mirrored.angles[1] == pytest.approx(m.angles[-1])


def test_float_noise_collinear_vertex_is_a_straight_angle():
    with pytest.raises(DegeneratePolygon, match="straight angle at vertex 1"):
        polygon_metrics([(0, 0), (1, 0), (2, -1e-12), (1, 1)])
    with pytest.raises(DegeneratePolygon, match="not convex"):
        polygon_metrics([(0, 0), (1, 0), (2, -1e-3), (1, 1)])
