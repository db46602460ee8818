import logging

from tilerscope.base.plane_sampler import PlaneSampler
from tilerscope.errors import GeometryError
from tilerscope.geometry.polyhedron import vertex_valence
from tilerscope.search.constructions import corner_hexagon_plane, corner_offset_bound

logger = logging.getLogger(__name__)


class CornerSampler(PlaneSampler):
    """Planes just past the neighbour plane of every trivalent vertex."""

    name = "corner"
    priority = 0

    def candidates(self, P, params, context):
        sequence = 0
        for w in range(P.v):
            if vertex_valence(P, w) != 3:
                continue
            try:
                delta, _, _ = corner_offset_bound(P, w)
            except GeometryError as e:
                logger.debug("corner construction skipped at vertex %d: %s", w, e)
                context.failures[self.name] += 1
                continue
            if delta <= 0:
                context.failures[self.name] += 1
                continue
            for step in params.epsilon_steps:
                epsilon = 4.0 * delta * step
                if epsilon >= delta:
                    continue
                plane = corner_hexagon_plane(P, w, epsilon)
                yield self.candidate(plane, sequence, vertex=w, epsilon=epsilon)
                sequence += 1
