"""
Plane sections of a convex polyhedron.

``cross_section`` intersects a plane with every edge of the polyhedron,
snaps intersections that land within ``eps_geom`` of an endpoint onto that
vertex, merges coincident points and orders the survivors angularly about
their centroid. The result is one of ``EmptySection``, ``SinglePoint``,
``Segment`` (the trivial intersections) or a ``SectionPolygon``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from tilerscope.errors import NoRoom, NotASection
from tilerscope.geometry.polyhedron import ConvexPolyhedron
from tilerscope.geometry.primitives import Plane, Point3, cross_2d, frozen, signed_area_2d

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OnEdge:
    edge: int


@dataclass(frozen=True)
class OnVertex:
    vertex: int


Incidence = Union[OnEdge, OnVertex]


@dataclass(frozen=True)
class EmptySection:
    pass


@dataclass(frozen=True, eq=False)
class SinglePoint:
    point: Point3


@dataclass(frozen=True, eq=False)
class Segment:
    start: Point3
    end: Point3


@dataclass(frozen=True, eq=False)
class SectionPolygon:
    """A nontrivial cross-section C(π).

    ``vertices`` are ordered counter-clockwise when seen from the tip of the
    carrier normal; ``incidences[k]`` says where vertex k sits on the
    polyhedron boundary.
    """

    carrier: Plane
    vertices: np.ndarray
    incidences: tuple[Incidence, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return self.n

    def planar_coordinates(self) -> np.ndarray:
        return self.carrier.to_planar(self.vertices)

    @property
    def area(self) -> float:
        return polygon_area(self)

    def edge_lengths(self) -> np.ndarray:
        return np.linalg.norm(np.roll(self.vertices, -1, axis=0) - self.vertices, axis=1)


SectionResult = Union[EmptySection, SinglePoint, Segment, SectionPolygon]


def is_trivial(result: SectionResult) -> bool:
    return not isinstance(result, SectionPolygon)


def polygon_area(section: SectionPolygon) -> float:
    return abs(signed_area_2d(section.planar_coordinates()))


def _collect_points(P: ConvexPolyhedron, dist: np.ndarray, eps: float):
    points: list[np.ndarray] = []
    incidences: list[Incidence] = []

    on_plane = np.abs(dist) <= eps
    for vertex in np.flatnonzero(on_plane):
        points.append(P.vertices[vertex])
        incidences.append(OnVertex(int(vertex)))

    edges = P.edge_array
    da, db = dist[edges[:, 0]], dist[edges[:, 1]]
    crossing = (~on_plane[edges[:, 0]]) & (~on_plane[edges[:, 1]]) & (da * db < 0)
    snapped = 0
    for idx in np.flatnonzero(crossing):
        a, b = edges[idx]
        t = da[idx] / (da[idx] - db[idx])
        if t <= eps:
            points.append(P.vertices[a])
            incidences.append(OnVertex(int(a)))
            snapped += 1
        elif t >= 1.0 - eps:
            points.append(P.vertices[b])
            incidences.append(OnVertex(int(b)))
            snapped += 1
        else:
            points.append(P.vertices[a] + t * (P.vertices[b] - P.vertices[a]))
            incidences.append(OnEdge(int(idx)))
    if snapped:
        logger.debug("snapped %d edge intersections onto vertices", snapped)
    return points, incidences


def _merge(points, incidences, eps: float):
    kept_pts: list[np.ndarray] = []
    kept_inc: list[Incidence] = []
    for point, inc in zip(points, incidences):
        for k, other in enumerate(kept_pts):
            if np.linalg.norm(point - other) < eps:
                if isinstance(inc, OnVertex) and not isinstance(kept_inc[k], OnVertex):
                    kept_inc[k] = inc
                    kept_pts[k] = point
                break
        else:
            kept_pts.append(point)
            kept_inc.append(inc)
    return kept_pts, kept_inc


def cross_section(P: ConvexPolyhedron, pi: Plane) -> SectionResult:
    eps = P.tolerance.eps_geom
    dist = pi.signed_distance(P.vertices)
    if np.all(dist > eps) or np.all(dist < -eps):
        return EmptySection()

    points, incidences = _merge(*_collect_points(P, dist, eps), eps)
    if not points:
        return EmptySection()
    if len(points) == 1:
        return SinglePoint(frozen(points[0]))

    pts = np.array(points)
    planar = pi.to_planar(pts)
    centre = planar.mean(axis=0)

    # 1-dimensional if every point sits on the line through the two farthest ones
    gaps = np.linalg.norm(planar[:, None, :] - planar[None, :, :], axis=2)
    i, j = np.unravel_index(int(np.argmax(gaps)), gaps.shape)
    direction = planar[j] - planar[i]
    length = float(np.linalg.norm(direction))
    offsets = np.abs(cross_2d(direction, planar - planar[i])) / length
    if len(points) == 2 or float(np.max(offsets)) < eps:
        return Segment(frozen(pts[i]), frozen(pts[j]))

    order = np.argsort(np.arctan2(planar[:, 1] - centre[1], planar[:, 0] - centre[0]), kind="stable")
    pts, planar = pts[order], planar[order]
    incidences = [incidences[k] for k in order]

    # drop points lying on the straight run between their neighbours
    keep = []
    for k in range(len(planar)):
        prev_pt, next_pt = planar[k - 1], planar[(k + 1) % len(planar)]
        span = next_pt - prev_pt
        turn = abs(float(cross_2d(span, planar[k] - prev_pt))) / float(np.linalg.norm(span))
        keep.append(turn >= eps)
    if not all(keep):
        logger.debug("dropping %d collinear section points", keep.count(False))
        pts = pts[keep]
        planar = planar[keep]
        incidences = [inc for inc, flag in zip(incidences, keep) if flag]

    if signed_area_2d(planar) < 0:
        pts = pts[::-1]
        incidences = incidences[::-1]

    return SectionPolygon(carrier=pi, vertices=frozen(pts), incidences=tuple(incidences))


def is_proper(section: SectionPolygon) -> bool:
    return all(isinstance(inc, OnEdge) for inc in section.incidences)


def _vertex_count(result: SectionResult) -> int:
    return result.n if isinstance(result, SectionPolygon) else 0


def proper_nudge(P: ConvexPolyhedron, pi: Plane) -> Plane:
    """Slide ``pi`` half-way towards the nearest vertex on one side.

    Between ``pi`` and the nearest vertex strictly on one side no vertex of P
    is met, so the midway plane misses every vertex and crosses the same
    edges the section touches on that side.
    """
    eps = P.tolerance.eps_geom
    current = cross_section(P, pi)
    if isinstance(current, EmptySection):
        raise NotASection("plane misses the polyhedron; nothing to nudge")
    n = _vertex_count(current)

    dist = pi.signed_distance(P.vertices)
    tried = False
    for side in (1.0, -1.0):
        ahead = side * dist
        ahead = ahead[ahead > eps]
        if ahead.size == 0:
            continue
        tried = True
        eta = float(ahead.min())
        candidate = pi.translated(side * eta / 2.0)
        result = cross_section(P, candidate)
        if isinstance(result, SectionPolygon) and is_proper(result) and result.n >= n:
            logger.debug("nudged plane by %.3g to a proper %d-gon", side * eta / 2.0, result.n)
            return candidate
    if not tried:
        raise NoRoom("no polyhedron vertex lies strictly on either side of the plane")
    raise NoRoom(f"neither side yields a proper section with at least {n} vertices")
