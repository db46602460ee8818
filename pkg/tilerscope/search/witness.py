"""Witness sections and the rejection predicate they are judged by."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from tilerscope.base.plane_sampler import Provenance
from tilerscope.config import ToleranceConfig
from tilerscope.geometry.polyhedron import ConvexPolyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import SectionPolygon, cross_section, is_proper
from tilerscope.tiling.classifier import TilerVerdict, has_equal_opposite_edges, tiler_verdict
from tilerscope.tiling.metrics import PolygonMetrics, polygon_metrics


class FailureTag(Enum):
    SEVEN_PLUS_EDGES = "seven_plus_edges"
    NO_EQUAL_OPPOSITE_EDGES = "no_equal_opposite_edges"
    HEXAGON_NO_CLASS = "hexagon_no_class"


@dataclass(frozen=True)
class SectionAssessment:
    metrics: PolygonMetrics
    verdict: TilerVerdict
    failure: FailureTag | None


def assess_section(section: SectionPolygon, tol: ToleranceConfig | None = None) -> SectionAssessment:
    """Metrics, tiler verdict and the failed condition (if any) of one section.

    A section fails when it has seven or more edges, when it is a proper
    hexagon without a pair of equal opposite edges, or when it is a hexagon
    matching none of the three hexagon classes. Raises ``DegeneratePolygon``
    for sections whose metrics cannot be trusted.
    """
    tol = tol or ToleranceConfig()
    metrics = polygon_metrics(section, tol)
    verdict = tiler_verdict(metrics, tol)
    failure = None
    if metrics.n >= 7:
        failure = FailureTag.SEVEN_PLUS_EDGES
    elif metrics.n == 6:
        if is_proper(section) and not has_equal_opposite_edges(metrics, tol):
            failure = FailureTag.NO_EQUAL_OPPOSITE_EDGES
        elif not verdict.hexagon_classes:
            failure = FailureTag.HEXAGON_NO_CLASS
    return SectionAssessment(metrics, verdict, failure)


def section_failure(section: SectionPolygon, tol: ToleranceConfig | None = None) -> FailureTag | None:
    return assess_section(section, tol).failure


@dataclass(frozen=True, eq=False)
class Witness:
    plane: Plane
    section: SectionPolygon
    verdict: TilerVerdict
    failure: FailureTag
    metrics: PolygonMetrics
    provenance: Provenance

    def replay(self, P: ConvexPolyhedron) -> bool:
        """Recompute the section from the stored plane and re-run the predicate."""
        fresh = cross_section(P, self.plane)
        if not isinstance(fresh, SectionPolygon) or fresh.n != self.section.n:
            return False
        if not _same_vertices(fresh.vertices, self.section.vertices, P.tolerance.eps_geom):
            return False
        return section_failure(fresh, P.tolerance) is self.failure


def _same_vertices(a: np.ndarray, b: np.ndarray, eps: float) -> bool:
    # same cyclic sequence up to the starting vertex
    n = len(a)
    for shift in range(n):
        if np.all(np.linalg.norm(np.roll(a, -shift, axis=0) - b, axis=1) <= eps):
            return True
    return False
