"""Points, planes and the small vector helpers everything else builds on."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from tilerscope.errors import GeometryError

# A point is a length-3 float array; collections of points are (n, 3) arrays.
Point3 = np.ndarray

_UNIT_NORMAL_TOLERANCE = 1e-9


def as_points(values) -> np.ndarray:
    pts = np.asarray(values, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise GeometryError(f"expected an (n, 3) array of points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise GeometryError("points contain non-finite coordinates")
    return pts


def frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float, copy=True)
    array.setflags(write=False)
    return array


def newell_normal(points: np.ndarray) -> np.ndarray:
    """Unnormalised normal of a polygon loop (Newell's method).

    The direction follows the right-hand rule for the loop order.
    """
    current = points
    following = np.roll(points, -1, axis=0)
    return np.array([
        np.sum((current[:, 1] - following[:, 1]) * (current[:, 2] + following[:, 2])),
        np.sum((current[:, 2] - following[:, 2]) * (current[:, 0] + following[:, 0])),
        np.sum((current[:, 0] - following[:, 0]) * (current[:, 1] + following[:, 1])),
    ])


def plane_basis(normal: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal (u, v) spanning the plane with ``u × v = normal``."""
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(normal)))] = 1.0
    u = np.cross(normal, axis)
    u /= np.linalg.norm(u)
    v = np.cross(normal, u)
    return u, v


def cross_2d(a, b):
    """z-component of the cross product of 2-D vectors (broadcasts)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def signed_area_2d(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


@dataclass(frozen=True)
class Plane:
    """The oriented plane ``{p : normal · p = offset}`` with a unit normal."""

    normal: tuple[float, float, float]
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        if n.shape != (3,) or not np.all(np.isfinite(n)) or not math.isfinite(self.offset):
            raise GeometryError(f"invalid plane coefficients {self.normal!r}, {self.offset!r}")
        if abs(float(np.linalg.norm(n)) - 1.0) > _UNIT_NORMAL_TOLERANCE:
            raise GeometryError(f"plane normal must be a unit vector, got {self.normal!r}")
        object.__setattr__(self, "normal", tuple(float(c) for c in n))
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float, d: float) -> "Plane":
        """Plane ``a·x + b·y + c·z = d``, rescaled to a unit normal."""
        n = np.array([a, b, c], dtype=float)
        length = float(np.linalg.norm(n))
        if length == 0.0 or not math.isfinite(length):
            raise GeometryError(f"plane coefficients ({a}, {b}, {c}) do not define a normal")
        return cls(tuple(n / length), float(d) / length)

    @classmethod
    def through_point(cls, normal: Sequence[float], point: Sequence[float]) -> "Plane":
        n = np.asarray(normal, dtype=float)
        length = float(np.linalg.norm(n))
        if length == 0.0:
            raise GeometryError("zero normal")
        n = n / length
        return cls(tuple(n), float(n @ np.asarray(point, dtype=float)))

    @property
    def normal_array(self) -> np.ndarray:
        return np.array(self.normal)

    def signed_distance(self, points) -> np.ndarray | float:
        pts = np.asarray(points, dtype=float)
        return pts @ self.normal_array - self.offset

    def translated(self, distance: float) -> "Plane":
        """Parallel plane moved ``distance`` along the normal."""
        return Plane(self.normal, self.offset + distance)

    def basis(self) -> tuple[np.ndarray, np.ndarray]:
        return plane_basis(self.normal_array)

    def origin(self) -> np.ndarray:
        return self.normal_array * self.offset

    def to_planar(self, points) -> np.ndarray:
        """2-D coordinates of ``points`` in this plane's (u, v) basis."""
        u, v = self.basis()
        rel = np.asarray(points, dtype=float) - self.origin()
        return np.column_stack([rel @ u, rel @ v])

    def coefficients(self) -> tuple[float, float, float, float]:
        return (*self.normal, self.offset)
