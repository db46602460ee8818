"""Edge lengths and interior angles of a convex polygon."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from tilerscope.config import ToleranceConfig
from tilerscope.errors import DegeneratePolygon
from tilerscope.geometry.primitives import cross_2d, newell_normal, plane_basis, signed_area_2d
from tilerscope.geometry.section import SectionPolygon


@dataclass(frozen=True)
class PolygonMetrics:
    """Edge i joins vertices i and i+1 (mod n); angle i sits at vertex i."""

    n: int
    edge_lengths: tuple[float, ...]
    angles: tuple[float, ...]

    def relabeled(self, rotation: int, reflected: bool = False) -> "PolygonMetrics":
        n = self.n
        if not reflected:
            angles = [self.angles[(k + rotation) % n] for k in range(n)]
            lengths = [self.edge_lengths[(k + rotation) % n] for k in range(n)]
        else:
            angles = [self.angles[(rotation - k) % n] for k in range(n)]
            lengths = [self.edge_lengths[(rotation - k - 1) % n] for k in range(n)]
        return PolygonMetrics(n, tuple(lengths), tuple(angles))

    def scaled(self, factor: float) -> "PolygonMetrics":
        return PolygonMetrics(self.n, tuple(factor * L for L in self.edge_lengths), self.angles)


def planar_points(poly) -> np.ndarray:
    """Counter-clockwise 2-D coordinates for a section or a point list."""
    if isinstance(poly, SectionPolygon):
        pts = poly.planar_coordinates()
    else:
        raw = np.asarray(poly, dtype=float)
        if raw.ndim != 2 or raw.shape[1] not in (2, 3):
            raise DegeneratePolygon(f"expected 2-D or 3-D points, got shape {raw.shape}")
        if raw.shape[1] == 2:
            pts = raw
        else:
            normal = newell_normal(raw)
            length = float(np.linalg.norm(normal))
            if length == 0.0:
                raise DegeneratePolygon("points do not span a plane")
            u, v = plane_basis(normal / length)
            rel = raw - raw.mean(axis=0)
            pts = np.column_stack([rel @ u, rel @ v])
    if len(pts) < 3:
        raise DegeneratePolygon(f"a polygon needs at least 3 vertices, got {len(pts)}")
    if signed_area_2d(pts) < 0:
        pts = pts[::-1]
    return pts


def polygon_metrics(poly, tol: ToleranceConfig | None = None) -> PolygonMetrics:
    tol = tol or ToleranceConfig()
    pts = planar_points(poly)
    n = len(pts)
    outgoing = np.roll(pts, -1, axis=0) - pts
    lengths = np.linalg.norm(outgoing, axis=1)
    if np.any(lengths <= tol.eps_geom):
        raise DegeneratePolygon(f"edge {int(np.argmin(lengths))} has zero length")

    incoming = pts - np.roll(pts, 1, axis=0)
    turns = cross_2d(incoming, outgoing)
    # near-collinear noise falls through to the straight-angle check below
    slack = tol.eps_geom * (lengths + np.roll(lengths, 1))
    if np.any(turns < -slack):
        raise DegeneratePolygon(f"polygon is not convex at vertex {int(np.argmin(turns + slack))}")

    back = -incoming
    angles = np.arctan2(np.abs(cross_2d(back, outgoing)), np.einsum("ij,ij->i", back, outgoing))
    straight = np.abs(math.pi - angles) <= tol.eps_angle
    if np.any(straight):
        raise DegeneratePolygon(f"straight angle at vertex {int(np.argmax(straight))}")

    total = float(np.sum(angles))
    if abs(total - (n - 2) * math.pi) > n * tol.eps_angle:
        raise DegeneratePolygon(f"angle sum {total:.9f} differs from (n-2)π")
    return PolygonMetrics(n, tuple(float(x) for x in lengths), tuple(float(a) for a in angles))


def count_angles(m: PolygonMetrics, target: float, tol: ToleranceConfig | None = None) -> int:
    tol = tol or ToleranceConfig()
    return sum(1 for angle in m.angles if abs(angle - target) <= tol.eps_angle)


def _parallel_by_turning(m: PolygonMetrics, tol: ToleranceConfig) -> bool:
    # edge j runs antiparallel to edge i when the exterior angles between them add up to π
    exterior = [math.pi - a for a in m.angles]
    for i in range(m.n):
        turned = 0.0
        for j in range(i + 1, m.n):
            turned += exterior[j]
            if abs(turned - math.pi) <= (j - i) * tol.eps_angle:
                return True
    return False


def has_parallel_edge_pair(poly, tol: ToleranceConfig | None = None) -> bool:
    tol = tol or ToleranceConfig()
    if isinstance(poly, PolygonMetrics):
        return _parallel_by_turning(poly, tol)
    pts = planar_points(poly)
    directions = np.roll(pts, -1, axis=0) - pts
    directions = directions / np.linalg.norm(directions, axis=1)[:, None]
    n = len(directions)
    for i in range(n):
        for j in range(i + 1, n):
            reverse = -directions[j]
            angle = math.atan2(abs(float(cross_2d(directions[i], reverse))), float(directions[i] @ reverse))
            if angle <= tol.eps_angle:
                return True
    return False
