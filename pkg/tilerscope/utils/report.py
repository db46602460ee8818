"""
Analysis reports.

A ``ReportDocument`` is plain data; ``emit_report`` turns it into bytes.
Floats are rounded to 12 significant digits and keys are sorted, so the same
input and parameters always give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

from tilerscope.config import SearchParams
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import OnEdge, SectionPolygon, SectionResult, is_proper
from tilerscope.search.verdict import UniversalVerdict
from tilerscope.search.witness import Witness
from tilerscope.tiling.metrics import PolygonMetrics
from tilerscope.utils.off_reader import dump_mesh

FORMATS = ("json", "text")


def _round(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.12g}") + 0.0
    if isinstance(value, dict):
        return {str(k): _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    if hasattr(value, "item"):
        return _round(value.item())
    return value


def mesh_digest(vertices, facets) -> dict:
    canonical = dump_mesh(vertices, facets)
    return {
        "vertices": len(vertices),
        "facets": len(facets),
        "sha256": hashlib.sha256(canonical.encode("utf-8")).hexdigest(),
    }


def plane_dict(plane: Plane) -> dict:
    a, b, c, d = plane.coefficients()
    return {"a": a, "b": b, "c": c, "d": d}


def metrics_dict(m: PolygonMetrics) -> dict:
    return {
        "edges": m.n,
        "edge_lengths": list(m.edge_lengths),
        "angles_deg": [math.degrees(a) for a in m.angles],
    }


def section_dict(section: SectionResult) -> dict:
    if not isinstance(section, SectionPolygon):
        return {"kind": type(section).__name__, "edges": 0}
    return {
        "kind": "polygon",
        "edges": section.n,
        "proper": is_proper(section),
        "area": section.area,
        "vertices": [[float(x) for x in point] for point in section.vertices],
        "incidences": [
            {"edge": inc.edge} if isinstance(inc, OnEdge) else {"vertex": inc.vertex}
            for inc in section.incidences
        ],
    }


def witness_dict(witness: Witness) -> dict:
    return {
        "plane": plane_dict(witness.plane),
        "section": section_dict(witness.section),
        "metrics": metrics_dict(witness.metrics),
        "failure": witness.failure.value,
        "tiler_verdict": witness.verdict.tag(),
        "provenance": witness.provenance.to_dict(),
    }


@dataclass
class ReportDocument:
    digest: dict
    validation: dict
    params: SearchParams
    screen: dict | None = None
    verdict: dict | None = None
    witness: dict | None = None
    coverage: dict | None = None
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_verdict(cls, vertices, facets, P, params: SearchParams, result: UniversalVerdict):
        verdict = {"outcome": result.outcome.value}
        if result.certificate is not None:
            verdict["certificate"] = result.certificate.value
        if result.combinatorial_reason is not None:
            verdict["combinatorial_reason"] = result.combinatorial_reason.value
        if result.parallel_facets:
            verdict["parallel_facets"] = [list(pair) for pair in result.parallel_facets]
        return cls(
            digest=mesh_digest(vertices, facets),
            validation={"valid": True, "v": P.v, "e": P.e, "f": P.f},
            params=params,
            screen=result.screen.to_dict(),
            verdict=verdict,
            witness=witness_dict(result.witness) if result.witness is not None else None,
            coverage=result.coverage.to_dict() if result.coverage is not None else None,
        )

    def to_dict(self) -> dict:
        doc = {
            "input": self.digest,
            "validation": self.validation,
            "parameters": self.params.to_dict(),
        }
        for key in ("screen", "verdict", "witness", "coverage"):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        doc.update(self.extra)
        return _round(doc)


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else key, value[key], out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for index, item in enumerate(value):
            _flatten(f"{prefix}[{index}]", item, out)
    else:
        out.append(f"{prefix}: {json.dumps(value)}")


def serialize(document: dict, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(document, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        lines: list[str] = []
        _flatten("", document, lines)
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}, expected one of {FORMATS}")


def emit_report(report: ReportDocument, fmt: str = "json") -> bytes:
    return serialize(report.to_dict(), fmt)
