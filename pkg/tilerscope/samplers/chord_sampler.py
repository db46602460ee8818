"""
Chord rotations of the hexagonal sections found by the earlier samplers.

Two chord families are tried on every hexagon: the short diagonals
V_i V_{i+2}, whose rotation moves the angle at V_{i+1}, and chords joining
interior points of opposite edges, whose rotation changes the lengths of the
edges it cuts. Non-proper hexagons are nudged to a proper one first.
"""

import logging

from tilerscope.base.plane_sampler import PlaneSampler
from tilerscope.errors import GeometryError, SearchError
from tilerscope.geometry.section import SectionPolygon, cross_section, is_proper, is_trivial, proper_nudge
from tilerscope.search.constructions import chord_rotation_sample, rotate_about_chord

logger = logging.getLogger(__name__)


def _proper_hexagon(P, section):
    if is_proper(section):
        return section
    try:
        nudged = cross_section(P, proper_nudge(P, section.carrier))
    except GeometryError as e:
        logger.debug("cannot nudge hexagon to a proper one: %s", e)
        return None
    if isinstance(nudged, SectionPolygon) and nudged.n == 6:
        return nudged
    return None


class ChordSampler(PlaneSampler):
    name = "chord"
    priority = 2

    def candidates(self, P, params, context):
        sequence = 0
        seeds = [section for sampler, section in context.hexagons if sampler != self.name]
        for index, seed in enumerate(seeds):
            hexagon = _proper_hexagon(P, seed)
            if hexagon is None:
                context.failures[self.name] += 1
                continue
            for epsilon in params.epsilon_steps:
                for i in range(6):
                    try:
                        plane = chord_rotation_sample(P, hexagon, i, (i + 2) % 6, epsilon)
                    except SearchError:
                        context.failures[self.name] += 1
                        continue
                    yield self.candidate(plane, sequence, hexagon=index, chord=[i, (i + 2) % 6], epsilon=epsilon)
                    sequence += 1
                for fraction in params.chord_fractions:
                    for i in range(3):
                        plane = self._opposite_edge_rotation(P, hexagon, i, fraction, epsilon)
                        if plane is None:
                            context.failures[self.name] += 1
                            continue
                        yield self.candidate(
                            plane, sequence, hexagon=index, edges=[i, i + 3],
                            fraction=fraction, epsilon=epsilon,
                        )
                        sequence += 1

    @staticmethod
    def _opposite_edge_rotation(P, hexagon, i, fraction, epsilon):
        pts = hexagon.vertices
        a = pts[i] + fraction * (pts[(i + 1) % 6] - pts[i])
        b = pts[i + 3] + fraction * (pts[(i + 4) % 6] - pts[i + 3])
        for angle in (epsilon, -epsilon):
            plane = rotate_about_chord(hexagon.carrier, a, b, angle)
            if not is_trivial(cross_section(P, plane)):
                return plane
        return None
