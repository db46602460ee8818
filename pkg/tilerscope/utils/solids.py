"""
Reference solids used by the tests, the sample meshes and the docs.

Each generator returns ``(vertices, facets)``: an (n, 3) float array and a
list of vertex-index cycles, ready for ``validate_polyhedron``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull


def unit_cube():
    # vertex k sits at its bit pattern (x = bit 0, y = bit 1, z = bit 2)
    vertices = np.array([(k & 1, (k >> 1) & 1, (k >> 2) & 1) for k in range(8)], dtype=float)
    facets = [
        [0, 2, 6, 4], [1, 3, 7, 5],
        [0, 1, 5, 4], [2, 3, 7, 6],
        [0, 1, 3, 2], [4, 5, 7, 6],
    ]
    return vertices, facets


def regular_tetrahedron():
    vertices = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
    facets = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    return vertices, facets


def regular_octahedron():
    vertices = np.array(
        [(0, 0, 1), (0, 0, -1), (-1, 0, 0), (1, 0, 0), (0, -1, 0), (0, 1, 0)], dtype=float
    )
    facets = [[x, y, z] for x in (2, 3) for y in (4, 5) for z in (0, 1)]
    return vertices, facets


def quad_pyramid(apex=(0.3, 0.4, 0.9)):
    base = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    vertices = np.array(base + [tuple(apex)], dtype=float)
    facets = [[0, 1, 2, 3]] + [[k, (k + 1) % 4, 4] for k in range(4)]
    return vertices, facets


def triangular_prism(shear=(0.0, 0.0), height=1.0):
    base = np.array([(0, 0, 0), (1, 0, 0), (0.3, 0.8, 0)], dtype=float)
    top = base + np.array([shear[0], shear[1], height])
    facets = [[0, 1, 2], [3, 4, 5], [0, 1, 4, 3], [1, 2, 5, 4], [2, 0, 3, 5]]
    return np.vstack([base, top]), facets


def triangular_frustum(scale=0.6, height=1.0):
    base = np.array([(0, 0, 0), (1, 0, 0), (0.3, 0.8, 0)], dtype=float)
    centre = base.mean(axis=0)
    top = centre + scale * (base - centre) + np.array([0.0, 0.0, height])
    facets = [[0, 1, 2], [3, 4, 5], [0, 1, 4, 3], [1, 2, 5, 4], [2, 0, 3, 5]]
    return np.vstack([base, top]), facets


def hexagonal_prism(height=1.0):
    ring = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3), 0.0) for k in range(6)]
    base = np.array(ring)
    top = base + np.array([0.0, 0.0, height])
    facets = [list(range(6)), list(range(6, 12))]
    facets += [[k, (k + 1) % 6, (k + 1) % 6 + 6, k + 6] for k in range(6)]
    return np.vstack([base, top]), facets


def hull_solid(points, decimals: int = 9):
    """Convex hull of ``points`` with coplanar hull triangles merged into facets."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    used = sorted(set(hull.vertices.tolist()))
    remap = {old: new for new, old in enumerate(used)}

    groups: dict[tuple, set[int]] = {}
    for simplex, equation in zip(hull.simplices, hull.equations):
        key = tuple(np.round(equation, decimals) + 0.0)
        groups.setdefault(key, set()).update(int(k) for k in simplex)

    facets = []
    for key, members in groups.items():
        normal = np.array(key[:3])
        members = sorted(members)
        loop = pts[members]
        centre = loop.mean(axis=0)
        u = loop[0] - centre
        u /= np.linalg.norm(u)
        v = np.cross(normal, u)
        angles = np.arctan2((loop - centre) @ v, (loop - centre) @ u)
        facets.append([remap[members[k]] for k in np.argsort(angles)])
    return pts[used], facets


def random_tetrahedra(count: int, seed: int = 0, min_volume: float = 0.02):
    """Seeded tetrahedra with vertices uniform in the unit cube."""
    rng = np.random.default_rng(seed)
    solids = []
    while len(solids) < count:
        pts = rng.uniform(0.0, 1.0, size=(4, 3))
        volume = abs(np.linalg.det(pts[1:] - pts[0])) / 6.0
        if volume < min_volume:
            continue
        solids.append(hull_solid(pts))
    return solids


CORPUS = {
    "cube": unit_cube,
    "tetrahedron": regular_tetrahedron,
    "octahedron": regular_octahedron,
    "quad_pyramid": quad_pyramid,
    "triangular_prism": triangular_prism,
    "oblique_prism": lambda: triangular_prism(shear=(0.3, 0.2)),
    "frustum": triangular_frustum,
    "hexagonal_prism": hexagonal_prism,
}
