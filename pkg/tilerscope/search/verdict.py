"""
The top-level universality verdict.

The combinatorial screen runs first. A failed screen is backed up by a
witness search; a tetrahedron is certified outright, a pentahedron when two
of its facets are parallel. Everything else is searched and, without a
witness, reported as unresolved together with the search coverage.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from tilerscope.combinatorics.screen import ScreenVerdict, Shape, combinatorial_screen
from tilerscope.config import SearchParams
from tilerscope.geometry.polyhedron import ConvexPolyhedron
from tilerscope.search.falsifier import CoverageReport, search_witness
from tilerscope.search.witness import Witness

logger = logging.getLogger(__name__)


class VerdictOutcome(Enum):
    CERTIFIED_UNIVERSAL = "certified_universal"
    NOT_UNIVERSAL = "not_universal"
    UNRESOLVED = "unresolved"


class CertificateReason(Enum):
    TETRAHEDRON_ALL_SECTIONS = "tetrahedron_all_sections"
    PENTAHEDRON_PARALLEL_FACETS = "pentahedron_parallel_facets"


@dataclass(frozen=True, eq=False)
class UniversalVerdict:
    outcome: VerdictOutcome
    screen: ScreenVerdict
    certificate: CertificateReason | None = None
    witness: Witness | None = None
    coverage: CoverageReport | None = None
    parallel_facets: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.outcome is VerdictOutcome.CERTIFIED_UNIVERSAL and self.certificate is None:
            raise ValueError("a certified verdict needs a certificate reason")
        if self.outcome is not VerdictOutcome.CERTIFIED_UNIVERSAL and self.certificate is not None:
            raise ValueError("only certified verdicts carry a certificate reason")
        if self.outcome is VerdictOutcome.NOT_UNIVERSAL and self.witness is None and self.screen.passed:
            raise ValueError("a negative verdict needs a witness or a failed screen")

    @property
    def combinatorial_reason(self):
        return None if self.screen.passed else self.screen.reason

    def exit_code(self) -> int:
        return {
            VerdictOutcome.CERTIFIED_UNIVERSAL: 0,
            VerdictOutcome.NOT_UNIVERSAL: 1,
            VerdictOutcome.UNRESOLVED: 2,
        }[self.outcome]


def parallel_facet_pairs(P: ConvexPolyhedron) -> list[tuple[int, int]]:
    """Pairs of facets whose outward normals are antiparallel within eps_angle."""
    normals = P.facet_normals
    pairs = []
    for i in range(P.f):
        for j in range(i + 1, P.f):
            if P.facet_graph.has_edge(i, j):
                continue
            cosine = float(np.clip(normals[i] @ normals[j], -1.0, 1.0))
            if np.pi - np.arccos(cosine) <= P.tolerance.eps_angle:
                pairs.append((i, j))
    return pairs


def verify_universal(P: ConvexPolyhedron, params: SearchParams | None = None, progress=None) -> UniversalVerdict:
    params = params or SearchParams()
    screen = combinatorial_screen(P)
    logger.info("screen: %s", screen.tag)

    if not screen.passed:
        outcome = search_witness(P, params, progress=progress)
        return UniversalVerdict(
            VerdictOutcome.NOT_UNIVERSAL, screen, witness=outcome.witness, coverage=outcome.coverage
        )

    if screen.shape is Shape.TETRAHEDRON:
        return UniversalVerdict(
            VerdictOutcome.CERTIFIED_UNIVERSAL, screen,
            certificate=CertificateReason.TETRAHEDRON_ALL_SECTIONS,
        )

    pairs = tuple(parallel_facet_pairs(P))
    if pairs:
        return UniversalVerdict(
            VerdictOutcome.CERTIFIED_UNIVERSAL, screen,
            certificate=CertificateReason.PENTAHEDRON_PARALLEL_FACETS, parallel_facets=pairs,
        )

    outcome = search_witness(P, params, progress=progress)
    if outcome.witness is not None:
        return UniversalVerdict(
            VerdictOutcome.NOT_UNIVERSAL, screen, witness=outcome.witness, coverage=outcome.coverage
        )
    return UniversalVerdict(VerdictOutcome.UNRESOLVED, screen, coverage=outcome.coverage)
