from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from tilerscope.geometry.polyhedron import ConvexPolyhedron


@dataclass(frozen=True)
class CountProfile:
    """Vertex, edge and facet counts split by facet size and vertex valence.

    ``f3``/``f4`` count facets with 3/4 edges and ``v3``/``v4`` vertices of
    valence 3/4. ``admissible`` is set when no facet has more than four
    edges and no vertex more than four neighbours, which is when the
    identities below are expected to hold.
    """

    v: int
    e: int
    f: int
    f3: int
    f4: int
    v3: int
    v4: int
    admissible: bool

    @property
    def euler_holds(self) -> bool:
        return self.f + self.v == self.e + 2

    @property
    def facet_sides_hold(self) -> bool:
        return 3 * self.f3 + 4 * self.f4 == 2 * self.e

    @property
    def vertex_ends_hold(self) -> bool:
        return 3 * self.v3 + 4 * self.v4 == 2 * self.e

    @property
    def triangles_plus_trivalent(self) -> int:
        return self.f3 + self.v3

    @property
    def balance_holds(self) -> bool:
        return 4 * (self.f4 - self.v4) == 3 * (self.v3 - self.f3)

    @property
    def tetravalent_bound_holds(self) -> bool:
        return 4 * self.v4 <= self.f3

    def identity_checks(self) -> dict[str, bool]:
        checks = {"euler": self.euler_holds}
        if self.admissible:
            checks.update({
                "facet_sides": self.facet_sides_hold,
                "vertex_ends": self.vertex_ends_hold,
                "f3_plus_v3_is_8": self.triangles_plus_trivalent == 8,
                "balance": self.balance_holds,
                "tetravalent_bound": self.tetravalent_bound_holds,
            })
        return checks

    def to_dict(self) -> dict:
        return {
            "v": self.v, "e": self.e, "f": self.f,
            "f3": self.f3, "f4": self.f4, "v3": self.v3, "v4": self.v4,
            "admissible": self.admissible,
            "identities": self.identity_checks(),
        }


def euler_counts(P: ConvexPolyhedron) -> CountProfile:
    sides = Counter(len(cycle) for cycle in P.facets)
    valences = Counter(degree for _, degree in P.graph.degree())
    admissible = max(sides) <= 4 and max(valences) <= 4
    return CountProfile(
        v=P.v, e=P.e, f=P.f,
        f3=sides.get(3, 0), f4=sides.get(4, 0),
        v3=valences.get(3, 0), v4=valences.get(4, 0),
        admissible=admissible,
    )
