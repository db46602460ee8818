import logging

from tilerscope.base.plane_sampler import PlaneSampler
from tilerscope.errors import ConstructionFailed
from tilerscope.search.constructions import construct_shave_plane

logger = logging.getLogger(__name__)


def fraction_pairs(fractions):
    """Edge fractions for the shave points: the midpoints first, then golden-ratio pairs."""
    pairs = [(0.5, 0.5)]
    count = len(fractions)
    for k in range(count):
        pair = (fractions[k], fractions[(k + 1) % count])
        if pair not in pairs:
            pairs.append(pair)
    return pairs


class ShaveSampler(PlaneSampler):
    """Shave planes at every (facet, vertex position)."""

    name = "shave"
    priority = 1

    def candidates(self, P, params, context):
        sequence = 0
        for fractions in fraction_pairs(params.chord_fractions):
            for facet, cycle in enumerate(P.facets):
                for h in range(len(cycle)):
                    try:
                        plane = construct_shave_plane(P, facet, h, params.epsilon_steps, fractions)
                    except ConstructionFailed as e:
                        logger.debug("%s", e)
                        context.failures[self.name] += 1
                        continue
                    yield self.candidate(plane, sequence, facet=facet, h=h, fractions=list(fractions))
                    sequence += 1
