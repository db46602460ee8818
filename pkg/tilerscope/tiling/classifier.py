"""
Tiler decisions for convex polygons.

Triangles and quadrilaterals always tile, polygons with seven or more edges
never do, hexagons tile exactly when one of Reinhardt's three condition sets
holds under some labelling, and pentagons with a pair of parallel edges
tile. Every other pentagon gets ``UNKNOWN``: the verdict never claims a
pentagon does not tile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from tilerscope.config import ToleranceConfig
from tilerscope.errors import WrongArity
from tilerscope.tiling.metrics import PolygonMetrics, has_parallel_edge_pair, polygon_metrics

TWO_PI = 2.0 * math.pi
TWO_PI_THIRDS = TWO_PI / 3.0


class HexagonClass(Enum):
    CLASS_I = "I"
    CLASS_II = "II"
    CLASS_III = "III"


@dataclass(frozen=True)
class ReinhardtClass:
    """A satisfied class together with the relabelling that exhibits it."""

    kind: HexagonClass
    rotation: int
    reflected: bool


class VerdictKind(Enum):
    TILER = "tiler"
    NOT_TILER = "not_tiler"
    UNKNOWN = "unknown"


class TilerReason(Enum):
    TRIANGLE_ALWAYS_TILES = "triangle_always_tiles"
    QUADRILATERAL_ALWAYS_TILES = "quadrilateral_always_tiles"
    HEXAGON_CLASS = "hexagon_class"
    SEVEN_PLUS_EDGES = "seven_plus_edges"
    HEXAGON_NO_CLASS = "hexagon_no_class"
    PENTAGON_PARALLEL_EDGES = "pentagon_parallel_edges"
    PENTAGON_UNDETERMINED = "pentagon_undetermined"


_REASON_KIND = {
    TilerReason.TRIANGLE_ALWAYS_TILES: VerdictKind.TILER,
    TilerReason.QUADRILATERAL_ALWAYS_TILES: VerdictKind.TILER,
    TilerReason.HEXAGON_CLASS: VerdictKind.TILER,
    TilerReason.PENTAGON_PARALLEL_EDGES: VerdictKind.TILER,
    TilerReason.SEVEN_PLUS_EDGES: VerdictKind.NOT_TILER,
    TilerReason.HEXAGON_NO_CLASS: VerdictKind.NOT_TILER,
    TilerReason.PENTAGON_UNDETERMINED: VerdictKind.UNKNOWN,
}


@dataclass(frozen=True)
class TilerVerdict:
    kind: VerdictKind
    reason: TilerReason
    hexagon_classes: frozenset[HexagonClass] = field(default_factory=frozenset)

    def __post_init__(self):
        if _REASON_KIND[self.reason] is not self.kind:
            raise ValueError(f"reason {self.reason.value} does not fit verdict {self.kind.value}")

    @property
    def is_tiler(self) -> bool:
        return self.kind is VerdictKind.TILER

    def tag(self) -> str:
        if self.reason is TilerReason.HEXAGON_CLASS:
            names = "/".join(sorted(c.value for c in self.hexagon_classes))
            return f"{self.reason.value}({names})"
        return self.reason.value


def _require_hexagon(m: PolygonMetrics) -> None:
    if m.n != 6:
        raise WrongArity(f"expected a hexagon, got {m.n} edges")


def _close(a: float, b: float, eps: float) -> bool:
    return abs(a - b) <= eps


def _class_holds(kind: HexagonClass, m: PolygonMetrics, tol: ToleranceConfig) -> bool:
    A, L = m.angles, m.edge_lengths
    sum_eps = 3.0 * tol.eps_angle
    if kind is HexagonClass.CLASS_I:
        return _close(A[0] + A[1] + A[2], TWO_PI, sum_eps) and _close(L[2], L[5], tol.eps_len)
    if kind is HexagonClass.CLASS_II:
        return (
            _close(A[0] + A[1] + A[3], TWO_PI, sum_eps)
            and _close(L[1], L[3], tol.eps_len)
            and _close(L[2], L[5], tol.eps_len)
        )
    return (
        all(_close(A[k], TWO_PI_THIRDS, tol.eps_angle) for k in (0, 2, 4))
        and _close(L[1], L[2], tol.eps_len)
        and _close(L[3], L[4], tol.eps_len)
        and _close(L[5], L[0], tol.eps_len)
    )


def reinhardt_matches(m: PolygonMetrics, tol: ToleranceConfig | None = None) -> list[ReinhardtClass]:
    """First labelling (rotation, then reflection) under which each class holds."""
    tol = tol or ToleranceConfig()
    _require_hexagon(m)
    found: dict[HexagonClass, ReinhardtClass] = {}
    for reflected in (False, True):
        for rotation in range(6):
            relabeled = m.relabeled(rotation, reflected)
            for kind in HexagonClass:
                if kind not in found and _class_holds(kind, relabeled, tol):
                    found[kind] = ReinhardtClass(kind, rotation, reflected)
    return [found[kind] for kind in HexagonClass if kind in found]


def classify_hexagon(m: PolygonMetrics, tol: ToleranceConfig | None = None) -> frozenset[HexagonClass]:
    return frozenset(match.kind for match in reinhardt_matches(m, tol))


def has_equal_opposite_edges(m: PolygonMetrics, tol: ToleranceConfig | None = None) -> bool:
    tol = tol or ToleranceConfig()
    _require_hexagon(m)
    L = m.edge_lengths
    return any(abs(L[i] - L[i + 3]) <= tol.eps_len for i in range(3))


def tiler_verdict(poly, tol: ToleranceConfig | None = None) -> TilerVerdict:
    tol = tol or ToleranceConfig()
    m = poly if isinstance(poly, PolygonMetrics) else polygon_metrics(poly, tol)
    if m.n == 3:
        return TilerVerdict(VerdictKind.TILER, TilerReason.TRIANGLE_ALWAYS_TILES)
    if m.n == 4:
        return TilerVerdict(VerdictKind.TILER, TilerReason.QUADRILATERAL_ALWAYS_TILES)
    if m.n >= 7:
        return TilerVerdict(VerdictKind.NOT_TILER, TilerReason.SEVEN_PLUS_EDGES)
    if m.n == 6:
        classes = classify_hexagon(m, tol)
        if classes:
            return TilerVerdict(VerdictKind.TILER, TilerReason.HEXAGON_CLASS, classes)
        return TilerVerdict(VerdictKind.NOT_TILER, TilerReason.HEXAGON_NO_CLASS)
    if has_parallel_edge_pair(poly, tol):
        return TilerVerdict(VerdictKind.TILER, TilerReason.PENTAGON_PARALLEL_EDGES)
    return TilerVerdict(VerdictKind.UNKNOWN, TilerReason.PENTAGON_UNDETERMINED)
