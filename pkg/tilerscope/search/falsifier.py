"""
Witness search.

Samplers run in priority order (corner, shave, chord, random) and share one
plane budget. Planes are sectioned and judged in chunks on a thread pool;
``executor.map`` keeps results in candidate order, so the first failing
section in a chunk is the one with the lowest (priority, sequence). Chunks
have a fixed size, which keeps both the witness and the coverage counts
independent of the number of workers.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from tilerscope.base.plane_sampler import Candidate, SearchContext
from tilerscope.config import SearchParams
from tilerscope.errors import DegeneratePolygon
from tilerscope.geometry.polyhedron import ConvexPolyhedron
from tilerscope.geometry.section import SectionPolygon, cross_section
from tilerscope.registry.sampler_registry import SAMPLER_ORDER, get_sampler
from tilerscope.search.witness import SectionAssessment, Witness, assess_section
from tilerscope.tiling.classifier import TWO_PI_THIRDS, VerdictKind
from tilerscope.tiling.metrics import count_angles

logger = logging.getLogger(__name__)

CHUNK_SIZE = 32


@dataclass
class CoverageReport:
    planes: Counter = field(default_factory=Counter)
    max_edges: int = 0
    unknown_pentagons: int = 0
    degenerate: int = 0
    trivial: int = 0
    construction_failures: Counter = field(default_factory=Counter)
    # a(C): how many hexagons were seen with k angles of 2π/3
    hexagon_a_counts: Counter = field(default_factory=Counter)
    edge_histogram: Counter = field(default_factory=Counter)

    @property
    def total_planes(self) -> int:
        return sum(self.planes.values())

    def to_dict(self) -> dict:
        return {
            "planes": {name: self.planes.get(name, 0) for name in SAMPLER_ORDER},
            "total_planes": self.total_planes,
            "max_edges": self.max_edges,
            "unknown_pentagons": self.unknown_pentagons,
            "degenerate": self.degenerate,
            "trivial": self.trivial,
            "construction_failures": {
                name: self.construction_failures.get(name, 0) for name in SAMPLER_ORDER
            },
            "hexagon_a_counts": {str(k): v for k, v in sorted(self.hexagon_a_counts.items())},
            "edge_histogram": {str(k): v for k, v in sorted(self.edge_histogram.items())},
        }


@dataclass(frozen=True)
class SearchOutcome:
    witness: Witness | None
    coverage: CoverageReport


@dataclass(frozen=True)
class _Evaluation:
    candidate: Candidate
    section: SectionPolygon | None
    assessment: SectionAssessment | None
    degenerate: bool = False


def _evaluate(P: ConvexPolyhedron, candidate: Candidate) -> _Evaluation:
    result = cross_section(P, candidate.plane)
    if not isinstance(result, SectionPolygon):
        return _Evaluation(candidate, None, None)
    try:
        assessment = assess_section(result, P.tolerance)
    except DegeneratePolygon as e:
        logger.debug("skipping degenerate section from %s: %s", candidate.provenance.sampler, e)
        return _Evaluation(candidate, result, None, degenerate=True)
    return _Evaluation(candidate, result, assessment)


def _record(evaluation: _Evaluation, coverage: CoverageReport, context: SearchContext, tol) -> None:
    sampler = evaluation.candidate.provenance.sampler
    coverage.planes[sampler] += 1
    if evaluation.section is None:
        coverage.trivial += 1
        return
    if evaluation.degenerate:
        coverage.degenerate += 1
        return
    metrics = evaluation.assessment.metrics
    coverage.max_edges = max(coverage.max_edges, metrics.n)
    coverage.edge_histogram[metrics.n] += 1
    if metrics.n == 5 and evaluation.assessment.verdict.kind is VerdictKind.UNKNOWN:
        coverage.unknown_pentagons += 1
    if metrics.n == 6:
        coverage.hexagon_a_counts[count_angles(metrics, TWO_PI_THIRDS, tol)] += 1
        context.hexagons.append((sampler, evaluation.section))


def _witness(evaluation: _Evaluation) -> Witness:
    a = evaluation.assessment
    return Witness(
        plane=evaluation.candidate.plane,
        section=evaluation.section,
        verdict=a.verdict,
        failure=a.failure,
        metrics=a.metrics,
        provenance=evaluation.candidate.provenance,
    )


def search_witness(
    P: ConvexPolyhedron,
    params: SearchParams | None = None,
    samplers: tuple[str, ...] = SAMPLER_ORDER,
    progress=None,
) -> SearchOutcome:
    """Run the samplers until a failing section turns up or the budget runs out.

    ``progress`` is an optional callable receiving the number of planes
    evaluated in each chunk (a ``tqdm.update`` fits).
    """
    params = params or SearchParams()
    tol = P.tolerance
    context = SearchContext()
    coverage = CoverageReport()
    remaining = params.budget

    with ThreadPoolExecutor(max_workers=params.workers) as executor:
        for name in samplers:
            sampler = get_sampler(name)
            stream = sampler.candidates(P, params, context)
            while remaining > 0:
                chunk = list(islice(stream, min(CHUNK_SIZE, remaining)))
                if not chunk:
                    break
                remaining -= len(chunk)
                evaluations = list(executor.map(lambda c: _evaluate(P, c), chunk))
                for evaluation in evaluations:
                    _record(evaluation, coverage, context, tol)
                    if evaluation.assessment is not None and evaluation.assessment.failure is not None:
                        coverage.construction_failures.update(context.failures)
                        witness = _witness(evaluation)
                        logger.info(
                            "witness from %s #%d: %d-gon, %s",
                            witness.provenance.sampler, witness.provenance.sequence,
                            witness.section.n, witness.failure.value,
                        )
                        if progress is not None:
                            progress(len(chunk))
                        return SearchOutcome(witness, coverage)
                if progress is not None:
                    progress(len(chunk))
            logger.debug("sampler %s used %d planes", name, coverage.planes[name])

    coverage.construction_failures.update(context.failures)
    logger.info("no witness within a budget of %d planes", params.budget)
    return SearchOutcome(None, coverage)


def falsify_universal(P: ConvexPolyhedron, params: SearchParams | None = None) -> Witness | None:
    return search_witness(P, params).witness
