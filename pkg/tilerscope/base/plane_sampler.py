from __future__ import annotations

from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from tilerscope.config import SearchParams
from tilerscope.geometry.polyhedron import ConvexPolyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import SectionPolygon


@dataclass(frozen=True)
class Provenance:
    sampler: str
    sequence: int
    params: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"sampler": self.sampler, "sequence": self.sequence, "params": dict(self.params)}


@dataclass(frozen=True)
class Candidate:
    plane: Plane
    provenance: Provenance


@dataclass
class SearchContext:
    """State shared by the samplers of one search.

    ``hexagons`` collects hexagonal sections seen so far in evaluation order,
    tagged with the sampler that produced them; ``failures`` counts
    constructions that could not produce a plane.
    """

    hexagons: list[tuple[str, SectionPolygon]] = field(default_factory=list)
    failures: Counter = field(default_factory=Counter)


class PlaneSampler(ABC):
    name: str = ""
    priority: int = 0

    @abstractmethod
    def candidates(
        self, P: ConvexPolyhedron, params: SearchParams, context: SearchContext
    ) -> Iterator[Candidate]:
        """Yield planes lazily; the caller stops pulling once its budget is spent."""

    def candidate(self, plane: Plane, sequence: int, **params) -> Candidate:
        return Candidate(plane, Provenance(self.name, sequence, params))
