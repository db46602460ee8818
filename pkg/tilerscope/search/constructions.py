"""
Cutting planes from the universality proofs.

* ``construct_shave_plane`` grazes a facet near every vertex but one and
  returns a section whose edge count is predicted by the valence-set.
* ``corner_hexagon_plane`` slices just past the plane through the three
  neighbours of a trivalent vertex.
* ``chord_rotation_sample`` tilts a section's carrier about one of its chords.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np
from scipy.spatial.transform import Rotation

from tilerscope.combinatorics.valence import facet_valences
from tilerscope.config import default_epsilon_steps
from tilerscope.errors import (
    BothTrivial,
    ConstructionFailed,
    EpsilonTooLarge,
    GeometryError,
    IndexOutOfRange,
    WrongValence,
)
from tilerscope.geometry.polyhedron import (
    ConvexPolyhedron,
    check_facet_index,
    check_vertex_index,
    vertex_valence,
)
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import SectionPolygon, cross_section, is_proper, is_trivial

logger = logging.getLogger(__name__)


def expected_shave_edges(P: ConvexPolyhedron, facet: int, h: int) -> int:
    valences = facet_valences(P, facet)
    return sum(valences) - valences[h] - 2 * len(valences) + 4


def _shave_frame(P: ConvexPolyhedron, facet: int, h: int, fractions: tuple[float, float]):
    cycle = P.facets[facet]
    n = len(cycle)
    v_h = P.vertices[cycle[h]]
    v_prev = P.vertices[cycle[(h - 1) % n]]
    v_next = P.vertices[cycle[(h + 1) % n]]
    u1 = v_h + fractions[0] * (v_prev - v_h)
    u2 = v_h + fractions[1] * (v_next - v_h)

    x_axis = (u2 - u1) / np.linalg.norm(u2 - u1)
    z_axis = -P.facet_normals[facet]
    y_axis = np.cross(z_axis, x_axis)
    if (v_h - u1) @ y_axis > 0:
        y_axis = -y_axis
    return u1, np.column_stack([x_axis, y_axis, z_axis])


def construct_shave_plane(
    P: ConvexPolyhedron,
    facet: int,
    h: int,
    eps_schedule: Sequence[float] | None = None,
    fractions: tuple[float, float] = (0.5, 0.5),
) -> Plane:
    """Plane through interior points of the two facet edges at vertex ``h``.

    In a frame with the facet at ``z = 0``, the body above it and vertex ``h``
    at negative ``y``, the plane is ``ε₀·y = z``. For each trial height
    ``z₀`` (the lowest off-facet vertex scaled by the schedule) the points
    where the rising edges of the other facet vertices reach ``z₀`` fix
    ``ε₀ = ½·min(z₀, z₀ / y_k)``. The first plane whose section has the
    predicted number of edges wins.
    """
    check_facet_index(P, facet)
    cycle = P.facets[facet]
    if not isinstance(h, (int, np.integer)) or not (0 <= h < len(cycle)):
        raise IndexOutOfRange(f"position {h!r} outside 0..{len(cycle) - 1} of facet {facet}")
    if not all(0.0 < f < 1.0 for f in fractions):
        raise ValueError(f"edge fractions must lie strictly between 0 and 1, got {fractions}")
    schedule = tuple(eps_schedule) if eps_schedule is not None else default_epsilon_steps()
    expected = expected_shave_edges(P, facet, h)

    origin, frame = _shave_frame(P, facet, h, fractions)
    local = (P.vertices - origin) @ frame
    on_facet = set(cycle)
    off_facet = [v for v in range(P.v) if v not in on_facet]
    z_min = float(local[off_facet, 2].min())

    rising = []
    for pos, v in enumerate(cycle):
        if pos == h:
            continue
        for w in P.graph.neighbors(v):
            if w not in on_facet:
                rising.append((v, w))

    tried = []
    for step in schedule:
        z0 = z_min * step
        ys = []
        for v, w in rising:
            t = (z0 - local[v, 2]) / (local[w, 2] - local[v, 2])
            ys.append(local[v, 1] + t * (local[w, 1] - local[v, 1]))
        if min(ys) <= P.tolerance.eps_geom:
            tried.append({"z0": z0, "reason": "rising edge crosses y = 0"})
            continue
        eps0 = 0.5 * min([z0] + [z0 / y for y in ys])
        normal = eps0 * frame[:, 1] - frame[:, 2]
        plane = Plane.through_point(normal, origin)
        result = cross_section(P, plane)
        got = 0 if is_trivial(result) else result.n
        if got == expected:
            logger.debug("shave plane facet=%d h=%d z0=%.3g eps0=%.3g", facet, h, z0, eps0)
            return plane
        tried.append({"z0": z0, "eps0": eps0, "edges": got})

    logger.debug("shave construction failed on facet %d at position %d", facet, h)
    raise ConstructionFailed(
        f"no shave plane on facet {facet} at position {h} gave {expected} edges",
        {"facet": facet, "h": h, "expected": expected, "tried": tried},
    )


def corner_offset_bound(P: ConvexPolyhedron, w: int) -> tuple[float, np.ndarray, float]:
    """Safe offset δ, unit normal pointing away from ``w`` and the height of ``w``.

    Offsets are measured in units of the distance from ``w`` to the plane
    through its three neighbours.
    """
    check_vertex_index(P, w)
    valence = vertex_valence(P, w)
    if valence != 3:
        raise WrongValence(f"vertex {w} has valence {valence}, expected 3", {"vertex": w, "valence": valence})
    a, b, c = (P.vertices[k] for k in P.neighbours(w))
    normal = np.cross(b - a, c - a)
    length = float(np.linalg.norm(normal))
    if length <= P.tolerance.eps_geom:
        raise GeometryError(f"the neighbours of vertex {w} are collinear")
    normal = normal / length
    if normal @ (P.vertices[w] - a) > 0:
        normal = -normal
    height = float(-(normal @ (P.vertices[w] - a)))

    excluded = {w, *P.neighbours(w)}
    others = [k for k in range(P.v) if k not in excluded]
    if not others:
        return 0.0, normal, height
    distances = (P.vertices[others] - a) @ normal / height
    return 0.5 * float(distances.min()), normal, height


def corner_hexagon_plane(P: ConvexPolyhedron, w: int, epsilon: float) -> Plane:
    """Plane parallel to the neighbour plane of ``w``, ``epsilon`` past it."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    delta, normal, height = corner_offset_bound(P, w)
    if epsilon >= delta:
        raise EpsilonTooLarge(
            f"epsilon {epsilon:g} is not below the safe offset {delta:g} at vertex {w}",
            {"vertex": w, "epsilon": epsilon, "delta": delta},
        )
    anchor = P.vertices[P.neighbours(w)[0]]
    return Plane(tuple(normal), float(normal @ anchor) + epsilon * height)


def rotate_about_chord(carrier: Plane, a, b, angle: float) -> Plane:
    """Rotate ``carrier`` by ``angle`` radians about the line through ``a`` and ``b``."""
    a = np.asarray(a, dtype=float)
    axis = np.asarray(b, dtype=float) - a
    length = float(np.linalg.norm(axis))
    if length == 0.0:
        raise GeometryError("chord endpoints coincide")
    if angle == 0.0:
        return carrier
    normal = Rotation.from_rotvec(axis / length * angle).apply(carrier.normal_array)
    return Plane.through_point(normal, a)


def chord_rotation_sample(
    P: ConvexPolyhedron,
    section: SectionPolygon,
    i: int,
    j: int,
    epsilon: float,
    direction: int = 1,
) -> Plane:
    """Rotate the carrier about the chord V_i V_j, falling back to the other sense."""
    for k in (i, j):
        if not isinstance(k, (int, np.integer)) or not (0 <= k < section.n):
            raise IndexOutOfRange(f"section vertex {k!r} outside 0..{section.n - 1}")
    if i == j:
        raise ValueError("a chord needs two distinct section vertices")
    if not is_proper(section):
        raise GeometryError("chord rotation needs a proper section")
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1, got {direction!r}")
    if epsilon == 0:
        return section.carrier

    a, b = section.vertices[i], section.vertices[j]
    for sense in (direction, -direction):
        plane = rotate_about_chord(section.carrier, a, b, sense * epsilon)
        if not is_trivial(cross_section(P, plane)):
            return plane
    raise BothTrivial(
        f"rotating by ±{epsilon:g} about chord ({i}, {j}) leaves the polyhedron",
        {"i": i, "j": j, "epsilon": epsilon},
    )
