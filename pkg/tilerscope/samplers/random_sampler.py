import logging

import numpy as np

from tilerscope.base.plane_sampler import PlaneSampler
from tilerscope.errors import GeometryError
from tilerscope.geometry.primitives import Plane

logger = logging.getLogger(__name__)

MAX_REJECTIONS = 10_000


def interior_point(P, rng: np.random.Generator) -> np.ndarray:
    """Uniform point strictly inside P by rejection from the bounding box."""
    lo, hi = P.bounding_box
    for _ in range(MAX_REJECTIONS):
        point = rng.uniform(lo, hi)
        if P.contains(point, slack=-P.tolerance.eps_geom)[0]:
            return point
    raise GeometryError("could not sample an interior point; the polyhedron is too thin")


def unit_normal(rng: np.random.Generator) -> np.ndarray:
    while True:
        direction = rng.normal(size=3)
        length = float(np.linalg.norm(direction))
        if length > 1e-12:
            return direction / length


def random_interior_planes(P, seed: int):
    """Endless stream of planes through uniform interior points with uniform normals."""
    rng = np.random.default_rng(seed)
    while True:
        point = interior_point(P, rng)
        yield Plane.through_point(unit_normal(rng), point)


class RandomSampler(PlaneSampler):
    name = "random"
    priority = 3

    def candidates(self, P, params, context):
        planes = random_interior_planes(P, params.seed)
        sequence = 0
        while True:
            try:
                plane = next(planes)
            except GeometryError as e:
                logger.warning("random sampler stopped after %d planes: %s", sequence, e)
                context.failures[self.name] += 1
                return
            yield self.candidate(plane, sequence)
            sequence += 1
