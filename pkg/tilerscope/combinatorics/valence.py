"""Valence-sets of facets and the facet admissibility rules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from tilerscope.errors import IndexOutOfRange
from tilerscope.geometry.polyhedron import ConvexPolyhedron, check_facet_index, vertex_valence


@dataclass(frozen=True)
class ValenceSet:
    """Multiset of vertex valences of one facet, stored in descending order."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(sorted((int(d) for d in self.values), reverse=True))
        if not values:
            raise ValueError("a valence-set cannot be empty")
        if values[-1] < 3:
            raise ValueError(f"valences are at least 3, got {list(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: int) -> "ValenceSet":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    @property
    def total(self) -> int:
        return sum(self.values)

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self.values) + "}"


def facet_valences(P: ConvexPolyhedron, facet: int) -> list[int]:
    """Valences in facet-cycle order (unsorted)."""
    check_facet_index(P, facet)
    return [vertex_valence(P, v) for v in P.facets[facet]]


def valence_set(P: ConvexPolyhedron, facet: int) -> ValenceSet:
    return ValenceSet(tuple(facet_valences(P, facet)))


def shave_edge_count(vs: ValenceSet, h: int) -> int:
    """Edges of the shave section that leaves out the vertex with valence ``vs[h]``."""
    if not isinstance(h, int) or not (0 <= h < len(vs)):
        raise IndexOutOfRange(f"position {h!r} outside 0..{len(vs) - 1}")
    return vs.total - vs[h] - 2 * len(vs) + 4


class AdmissibilityReason(Enum):
    ADMISSIBLE = "admissible"
    TOO_FEW_VERTICES = "too_few_vertices"
    FACET_TOO_LARGE = "facet_too_large"
    SHAVE_INEQUALITY = "shave_inequality"
    ALL_TRIVALENT_PENTAGON = "all_trivalent_pentagon"
    EXCLUDED_VALENCE_SET = "excluded_valence_set"


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    reason: AdmissibilityReason

    def __bool__(self) -> bool:
        return self.admissible


ADMISSIBLE_SETS = frozenset({(3, 3, 3), (4, 3, 3), (3, 3, 3, 3)})


def facet_admissible(vs: ValenceSet | Iterable[int]) -> Admissibility:
    """Can a facet with this valence-set belong to a universal tiler?

    Rules are applied in order: six or more sides, the shave inequality
    Σd − d_h ≤ 2n + 2 for every h, the all-trivalent pentagon, and finally the
    sets {4,4,3}, {4,4,4}, {5,3,3}, {4,3,3,3} that a perturbed shave section
    rules out.
    """
    if not isinstance(vs, ValenceSet):
        vs = ValenceSet(tuple(vs))
    n = len(vs)
    if n < 3:
        return Admissibility(False, AdmissibilityReason.TOO_FEW_VERTICES)
    if n > 5:
        return Admissibility(False, AdmissibilityReason.FACET_TOO_LARGE)
    if vs.total - min(vs) > 2 * n + 2:
        return Admissibility(False, AdmissibilityReason.SHAVE_INEQUALITY)
    if n == 5:
        return Admissibility(False, AdmissibilityReason.ALL_TRIVALENT_PENTAGON)
    if vs.values in ADMISSIBLE_SETS:
        return Admissibility(True, AdmissibilityReason.ADMISSIBLE)
    return Admissibility(False, AdmissibilityReason.EXCLUDED_VALENCE_SET)
