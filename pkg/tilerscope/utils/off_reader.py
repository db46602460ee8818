"""
OFF mesh files.

Layout: a header line ``OFF``, a counts line ``v f e``, ``v`` vertex lines of
three reals, then ``f`` facet lines ``k i1 ... ik``. Text after ``#`` and
blank lines are ignored. The edge count is read but not trusted.
"""

from __future__ import annotations

import io
import logging
import math
import re
from os import PathLike
from typing import IO, Iterator

import numpy as np

from tilerscope.errors import MeshIndexError, MeshParseError
from tilerscope.geometry.polyhedron import orient_facets

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")

Token = tuple[str, int]


def _content_lines(stream: IO[str]) -> Iterator[tuple[int, list[Token]]]:
    for number, raw in enumerate(stream, start=1):
        text = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]
        if tokens:
            yield number, tokens


def _next_line(lines, last_line: int, what: str):
    try:
        return next(lines)
    except StopIteration:
        raise MeshParseError(f"unexpected end of file, expected {what}", last_line + 1) from None


def _as_int(token: Token, line: int, what: str) -> int:
    text, column = token
    try:
        return int(text)
    except ValueError:
        raise MeshParseError(f"expected an integer {what}, got {text!r}", line, column) from None


def _as_float(token: Token, line: int) -> float:
    text, column = token
    try:
        value = float(text)
    except ValueError:
        raise MeshParseError(f"expected a coordinate, got {text!r}", line, column) from None
    if not math.isfinite(value):
        raise MeshParseError(f"coordinate {text!r} is not finite", line, column)
    return value


def _parse(stream: IO[str]):
    lines = _content_lines(stream)
    line, tokens = _next_line(lines, 0, "the OFF header")
    if tokens[0][0] != "OFF":
        raise MeshParseError(f"expected header 'OFF', got {tokens[0][0]!r}", line, tokens[0][1])
    if len(tokens) > 1:
        counts_line, counts = line, tokens[1:]
    else:
        counts_line, counts = _next_line(lines, line, "the counts line 'v f e'")
    if len(counts) != 3:
        raise MeshParseError(f"expected 3 counts 'v f e', got {len(counts)}", counts_line, counts[0][1])
    n_vertices, n_facets, _ = (_as_int(t, counts_line, "count") for t in counts)
    if n_vertices < 0 or n_facets < 0:
        raise MeshParseError("counts must not be negative", counts_line, counts[0][1])

    last = counts_line
    vertices = []
    for _ in range(n_vertices):
        last, tokens = _next_line(lines, last, f"vertex {len(vertices)}")
        if len(tokens) != 3:
            column = tokens[3][1] if len(tokens) > 3 else tokens[-1][1]
            raise MeshParseError(f"a vertex needs 3 coordinates, got {len(tokens)}", last, column)
        vertices.append([_as_float(t, last) for t in tokens])

    facets = []
    for _ in range(n_facets):
        last, tokens = _next_line(lines, last, f"facet {len(facets)}")
        size = _as_int(tokens[0], last, "vertex count")
        if size < 3:
            raise MeshParseError(f"a facet needs at least 3 vertices, got {size}", last, tokens[0][1])
        if len(tokens) != size + 1:
            column = tokens[size + 1][1] if len(tokens) > size + 1 else tokens[-1][1]
            raise MeshParseError(
                f"facet declares {size} vertices but lists {len(tokens) - 1}", last, column
            )
        cycle = []
        for token in tokens[1:]:
            index = _as_int(token, last, "vertex index")
            if not 0 <= index < n_vertices:
                raise MeshIndexError(
                    f"facet {len(facets)} references vertex {index}, but only {n_vertices} exist", last
                )
            cycle.append(index)
        facets.append(tuple(cycle))

    for extra_line, tokens in lines:
        raise MeshParseError(
            f"found data after the {n_facets} declared facets (header count mismatch)",
            extra_line, tokens[0][1],
        )
    return np.array(vertices, dtype=float).reshape(-1, 3), facets


def parse_mesh(source: str | PathLike | IO[str]):
    """Read an OFF mesh from a path or an open text stream.

    Returns ``(vertices, facets)`` without validating the polyhedron; facet
    cycles are reoriented so their normals point away from the vertex
    centroid.
    """
    if hasattr(source, "read"):
        vertices, facets = _parse(source)
    else:
        with open(source, "r", encoding="utf-8") as f:
            vertices, facets = _parse(f)
    if len(vertices) and facets:
        facets = orient_facets(vertices, facets)
    logger.debug("parsed mesh with %d vertices and %d facets", len(vertices), len(facets))
    return vertices, facets


def dump_mesh(vertices, facets) -> str:
    """Canonical OFF text; ``parse_mesh`` reads it back unchanged."""
    pts = np.asarray(vertices, dtype=float).reshape(-1, 3)
    cycles = [tuple(int(i) for i in cycle) for cycle in facets]
    edges = {frozenset((c[k], c[(k + 1) % len(c)])) for c in cycles for k in range(len(c))}
    out = io.StringIO()
    out.write("OFF\n")
    out.write(f"{len(pts)} {len(cycles)} {len(edges)}\n")
    for point in pts:
        out.write(" ".join(repr(float(x)) for x in point) + "\n")
    for cycle in cycles:
        out.write(" ".join(str(i) for i in (len(cycle),) + cycle) + "\n")
    return out.getvalue()
