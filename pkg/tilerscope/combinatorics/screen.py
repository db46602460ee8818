"""
Purely combinatorial screen for universal tilers.

Valence-set admissibility is checked before the counting identities: the
identities only describe polyhedra whose facets are triangles and
quadrangles and whose vertices have valence 3 or 4.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from tilerscope.combinatorics.euler import CountProfile, euler_counts
from tilerscope.combinatorics.valence import facet_admissible, valence_set
from tilerscope.geometry.polyhedron import ConvexPolyhedron

logger = logging.getLogger(__name__)


class Shape(Enum):
    TETRAHEDRON = "tetrahedron"
    QUAD_PYRAMID = "quad_pyramid"
    TRIANGULAR_BASE_PENTAHEDRON = "triangular_base_pentahedron"


class ScreenReason(Enum):
    FACET_TOO_MANY_EDGES = "facet_too_many_edges"
    INADMISSIBLE_VALENCE_SET = "inadmissible_valence_set"
    COUNTING_VIOLATION_CUBE_TYPE = "counting_violation_cube_type"
    COUNTING_VIOLATION_OTHER = "counting_violation_other"


@dataclass(frozen=True)
class ScreenVerdict:
    passed: bool
    shape: Shape | None = None
    reason: ScreenReason | None = None
    profile: CountProfile | None = None
    facet: int | None = None
    detail: str = ""

    def __post_init__(self):
        if self.passed and (self.shape is None or self.reason is not None):
            raise ValueError("a passing screen names a shape and no reason")
        if not self.passed and (self.reason is None or self.shape is not None):
            raise ValueError("a failing screen names a reason and no shape")

    @property
    def tag(self) -> str:
        return self.shape.value if self.passed else self.reason.value

    def to_dict(self) -> dict:
        out = {"passed": self.passed, "tag": self.tag, "detail": self.detail}
        if self.facet is not None:
            out["facet"] = self.facet
        if self.profile is not None:
            out["profile"] = self.profile.to_dict()
        return out


_SHAPES = {
    (4, 0): Shape.TETRAHEDRON,
    (4, 1): Shape.QUAD_PYRAMID,
    (2, 3): Shape.TRIANGULAR_BASE_PENTAHEDRON,
}


def combinatorial_screen(P: ConvexPolyhedron) -> ScreenVerdict:
    for idx, cycle in enumerate(P.facets):
        if len(cycle) >= 5:
            return ScreenVerdict(
                False, reason=ScreenReason.FACET_TOO_MANY_EDGES, facet=idx,
                detail=f"facet {idx} has {len(cycle)} edges",
            )

    for idx in range(P.f):
        vs = valence_set(P, idx)
        verdict = facet_admissible(vs)
        if not verdict:
            return ScreenVerdict(
                False, reason=ScreenReason.INADMISSIBLE_VALENCE_SET, facet=idx,
                detail=f"facet {idx} has valence-set {vs} ({verdict.reason.value})",
            )

    profile = euler_counts(P)
    failed = [name for name, ok in profile.identity_checks().items() if not ok]
    if failed:
        logger.warning("counting identities fail on an admissible profile: %s", failed)

    shape = _SHAPES.get((profile.f3, profile.f4))
    if shape is not None:
        return ScreenVerdict(True, shape=shape, profile=profile)
    if profile.f3 == 0:
        return ScreenVerdict(
            False, reason=ScreenReason.COUNTING_VIOLATION_CUBE_TYPE, profile=profile,
            detail="all facets are quadrangles with trivalent vertices (cube type)",
        )
    return ScreenVerdict(
        False, reason=ScreenReason.COUNTING_VIOLATION_OTHER, profile=profile,
        detail=f"f3={profile.f3}, f4={profile.f4} admits no universal tiler",
    )
