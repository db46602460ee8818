"""
Validated convex polyhedra.

A ``ConvexPolyhedron`` is only ever produced by ``validate_polyhedron``; once
built it is immutable and safe to share between threads.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from tilerscope.config import ToleranceConfig
from tilerscope.errors import (
    BadIncidence,
    EulerViolation,
    IndexOutOfRange,
    NonConvex,
    NonPlanarFacet,
    PolyhedronError,
)
from tilerscope.geometry.primitives import Plane, as_points, frozen, newell_normal
from tilerscope.utils.networkx_graph import (
    build_facet_graph,
    build_graph_from_schema,
    polyhedron_schema,
)

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def orient_facets(vertices: np.ndarray, facets: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Reverse every facet cycle whose normal points towards the vertex centroid."""
    pts = np.asarray(vertices, dtype=float)
    centre = pts.mean(axis=0)
    oriented = []
    for cycle in facets:
        cycle = tuple(int(i) for i in cycle)
        loop = pts[list(cycle)]
        normal = newell_normal(loop)
        if normal @ (loop.mean(axis=0) - centre) < 0:
            cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
        oriented.append(cycle)
    return oriented


@dataclass(frozen=True, eq=False)
class ConvexPolyhedron:
    vertices: np.ndarray
    facets: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    facet_planes: tuple[Plane, ...]
    tolerance: ToleranceConfig

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def f(self) -> int:
        return len(self.facets)

    @cached_property
    def graph(self) -> nx.Graph:
        """Vertex/edge graph; edge attribute ``facets`` lists the two facets."""
        return build_graph_from_schema(polyhedron_schema(self.vertices, self.facets))

    @cached_property
    def facet_graph(self) -> nx.Graph:
        return build_facet_graph(self.graph)

    @cached_property
    def edge_array(self) -> np.ndarray:
        arr = np.array(self.edges, dtype=int).reshape(-1, 2)
        arr.setflags(write=False)
        return arr

    @cached_property
    def facet_normals(self) -> np.ndarray:
        return frozen(np.array([p.normal for p in self.facet_planes]))

    @cached_property
    def facet_offsets(self) -> np.ndarray:
        return frozen(np.array([p.offset for p in self.facet_planes]))

    @cached_property
    def centroid(self) -> np.ndarray:
        return frozen(self.vertices.mean(axis=0))

    @cached_property
    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return frozen(self.vertices.min(axis=0)), frozen(self.vertices.max(axis=0))

    def contains(self, points, slack: float | None = None) -> np.ndarray:
        """Membership of points in the closed polyhedron (all facet half-spaces)."""
        slack = self.tolerance.eps_geom if slack is None else slack
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return np.all(pts @ self.facet_normals.T - self.facet_offsets <= slack, axis=1)

    def neighbours(self, vertex: int) -> list[int]:
        check_vertex_index(self, vertex)
        return sorted(self.graph.neighbors(vertex))


def check_vertex_index(P: ConvexPolyhedron, vertex: int) -> None:
    if not isinstance(vertex, (int, np.integer)) or not (0 <= vertex < P.v):
        raise IndexOutOfRange(f"vertex index {vertex!r} outside 0..{P.v - 1}")


def check_facet_index(P: ConvexPolyhedron, facet: int) -> None:
    if not isinstance(facet, (int, np.integer)) or not (0 <= facet < P.f):
        raise IndexOutOfRange(f"facet index {facet!r} outside 0..{P.f - 1}")


def validate_polyhedron(vertices, facets, tolerance: ToleranceConfig | None = None) -> ConvexPolyhedron:
    tol = tolerance or ToleranceConfig()
    pts = as_points(vertices)
    cycles = [tuple(int(i) for i in cycle) for cycle in facets]

    if len(pts) < 4:
        raise PolyhedronError(f"a polyhedron needs at least 4 vertices, got {len(pts)}")
    if len(cycles) < 4:
        raise PolyhedronError(f"a polyhedron needs at least 4 facets, got {len(cycles)}")

    for idx, cycle in enumerate(cycles):
        bad = [i for i in cycle if not (0 <= i < len(pts))]
        if bad:
            raise IndexOutOfRange(f"facet {idx} references missing vertices {bad}")
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            raise BadIncidence(f"facet {idx} needs at least 3 distinct vertices, got {list(cycle)}")

    cycles = orient_facets(pts, cycles)

    planes = []
    for idx, cycle in enumerate(cycles):
        loop = pts[list(cycle)]
        normal = newell_normal(loop)
        length = float(np.linalg.norm(normal))
        if length <= tol.eps_geom:
            raise NonPlanarFacet(f"facet {idx} has no area")
        plane = Plane.through_point(normal / length, loop.mean(axis=0))
        deviation = float(np.max(np.abs(plane.signed_distance(loop))))
        if deviation > tol.eps_geom:
            raise NonPlanarFacet(
                f"facet {idx} deviates {deviation:.3g} from its plane (eps_geom={tol.eps_geom:g})"
            )
        planes.append(plane)

    for idx, plane in enumerate(planes):
        dist = plane.signed_distance(pts)
        worst = int(np.argmax(dist))
        if dist[worst] > tol.eps_geom:
            raise NonConvex(
                f"vertex {worst} lies {dist[worst]:.3g} outside the plane of facet {idx}"
            )
        if np.all(dist >= -tol.eps_geom):
            raise NonConvex(f"all vertices lie in the plane of facet {idx}")

    counts = Counter(
        edge_key(cycle[k], cycle[(k + 1) % len(cycle)])
        for cycle in cycles
        for k in range(len(cycle))
    )
    for edge, count in sorted(counts.items()):
        if count != 2:
            raise BadIncidence(f"edge {edge} is shared by {count} facets instead of 2")
    edges = tuple(sorted(counts))

    v, e, f = len(pts), len(edges), len(cycles)
    if v + f != e + 2:
        raise EulerViolation(f"v + f = {v + f} but e + 2 = {e + 2} (v={v}, e={e}, f={f})")

    logger.debug("validated polyhedron v=%d e=%d f=%d", v, e, f)
    return ConvexPolyhedron(
        vertices=frozen(pts),
        facets=tuple(cycles),
        edges=edges,
        facet_planes=tuple(planes),
        tolerance=tol,
    )


def vertex_valence(P: ConvexPolyhedron, v: int) -> int:
    check_vertex_index(P, v)
    return int(P.graph.degree(v))
