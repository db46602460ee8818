import argparse
import logging
import sys

import networkx as nx
from tqdm import tqdm

from tilerscope.config import (
    DEFAULT_BUDGET,
    DEFAULT_EPS_ANGLE,
    DEFAULT_EPS_GEOM,
    DEFAULT_EPS_LEN,
    DEFAULT_SEED,
    SearchParams,
    ToleranceConfig,
    configure_logging,
    default_workers,
)
from tilerscope.combinatorics.screen import combinatorial_screen
from tilerscope.errors import (
    ConfigError,
    DegeneratePolygon,
    GeometryError,
    MeshIndexError,
    MeshParseError,
    PolyhedronError,
    TilerScopeError,
)
from tilerscope.geometry.polyhedron import ConvexPolyhedron, validate_polyhedron
from tilerscope.geometry.primitives import Plane
from tilerscope.geometry.section import SectionPolygon, cross_section
from tilerscope.search.verdict import verify_universal
from tilerscope.tiling.classifier import VerdictKind, tiler_verdict
from tilerscope.tiling.metrics import polygon_metrics
from tilerscope.utils.networkx_graph import graph_to_json, sanitize_for_graphml
from tilerscope.utils.off_reader import parse_mesh
from tilerscope.utils.report import (
    FORMATS,
    ReportDocument,
    emit_report,
    mesh_digest,
    metrics_dict,
    plane_dict,
    section_dict,
)
from tilerscope.utils.svg_render import render_section_svg, render_witness_svg

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 64
EXIT_INTERNAL_ERROR = 70

INPUT_ERRORS = (MeshParseError, MeshIndexError, PolyhedronError, ConfigError, GeometryError, OSError)


def load_polyhedron(path, tolerance: ToleranceConfig | None = None):
    vertices, facets = parse_mesh(path)
    P = validate_polyhedron(vertices, facets, tolerance)
    return vertices, facets, P


def analyze_mesh(path, params: SearchParams | None = None, progress=None):
    """Parse, validate and verify one mesh file; returns ``(P, verdict, report)``."""
    params = params or SearchParams()
    vertices, facets, P = load_polyhedron(path, params.tolerance)
    verdict = verify_universal(P, params, progress=progress)
    report = ReportDocument.from_verdict(vertices, facets, P, params, verdict)
    return P, verdict, report


def _validation(P: ConvexPolyhedron) -> dict:
    return {"valid": True, "v": P.v, "e": P.e, "f": P.f}


def parse_plane(text: str) -> Plane:
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError(f"--plane expects four numbers a,b,c,d, got {text!r}")
    try:
        a, b, c, d = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"--plane expects four numbers a,b,c,d, got {text!r}") from None
    return Plane.from_coefficients(a, b, c, d)


def _tolerance(args) -> ToleranceConfig:
    return ToleranceConfig(eps_geom=args.eps_geom, eps_len=args.eps_len, eps_angle=args.eps_angle)


def _write(payload: bytes) -> None:
    sys.stdout.buffer.write(payload)
    sys.stdout.flush()


def _write_svg(path, payload: bytes) -> None:
    with open(path, "wb") as f:
        f.write(payload)
    logger.info("wrote %s", path)


def run_verify(args) -> int:
    params = SearchParams(
        budget=args.budget, seed=args.seed, tolerance=_tolerance(args), workers=args.workers
    )
    with tqdm(total=params.budget, desc="planes", disable=not args.progress, file=sys.stderr) as bar:
        P, verdict, report = analyze_mesh(args.mesh, params, progress=bar.update)
    _write(emit_report(report, args.format))
    if args.svg_out:
        if verdict.witness is not None:
            _write_svg(args.svg_out, render_witness_svg(verdict.witness))
        else:
            logger.info("no witness to draw; %s not written", args.svg_out)
    return verdict.exit_code()


def run_screen(args) -> int:
    tolerance = _tolerance(args)
    vertices, facets, P = load_polyhedron(args.mesh, tolerance)
    screen = combinatorial_screen(P)
    report = ReportDocument(
        digest=mesh_digest(vertices, facets),
        validation=_validation(P),
        params=SearchParams(tolerance=tolerance),
        screen=screen.to_dict(),
        extra={"graph": graph_to_json(P.graph)},
    )
    _write(emit_report(report, args.format))
    if args.graphml_out:
        nx.write_graphml(sanitize_for_graphml(P.graph), args.graphml_out)
        logger.info("wrote %s", args.graphml_out)
    return 0 if screen.passed else 1


def run_section(args) -> int:
    tolerance = _tolerance(args)
    plane = parse_plane(args.plane)
    vertices, facets, P = load_polyhedron(args.mesh, tolerance)
    result = cross_section(P, plane)
    extra = {"plane": plane_dict(plane), "section": section_dict(result)}
    code = 2
    if isinstance(result, SectionPolygon):
        try:
            metrics = polygon_metrics(result, tolerance)
        except DegeneratePolygon as e:
            extra["degenerate"] = str(e)
        else:
            verdict = tiler_verdict(metrics, tolerance)
            extra["metrics"] = metrics_dict(metrics)
            extra["tiler_verdict"] = {"kind": verdict.kind.value, "tag": verdict.tag()}
            code = {VerdictKind.TILER: 0, VerdictKind.NOT_TILER: 1, VerdictKind.UNKNOWN: 2}[verdict.kind]
        if args.svg_out:
            _write_svg(args.svg_out, render_section_svg(result))
    report = ReportDocument(
        digest=mesh_digest(vertices, facets),
        validation=_validation(P),
        params=SearchParams(tolerance=tolerance),
        extra=extra,
    )
    _write(emit_report(report, args.format))
    return code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"Error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)


def _add_common(parser):
    parser.add_argument("mesh", help="OFF mesh file")
    parser.add_argument("--eps-geom", type=float, default=DEFAULT_EPS_GEOM,
                        help=f"incidence/coincidence tolerance (default: {DEFAULT_EPS_GEOM:g})")
    parser.add_argument("--eps-len", type=float, default=DEFAULT_EPS_LEN,
                        help=f"edge-length equality tolerance (default: {DEFAULT_EPS_LEN:g})")
    parser.add_argument("--eps-angle", type=float, default=DEFAULT_EPS_ANGLE,
                        help=f"angle equality tolerance in radians (default: {DEFAULT_EPS_ANGLE:g})")
    parser.add_argument("--format", choices=FORMATS, default="json", help="report format (default: json)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")


def build_parser():
    parser = _Parser(prog="tiler-scope", description="Universal-tiler analysis of convex polyhedra")
    subparsers = parser.add_subparsers(dest="function", help="Available functions")

    parser_verify = subparsers.add_parser("verify", help="Certify, refute or leave a polyhedron unresolved")
    _add_common(parser_verify)
    parser_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                               help=f"maximum number of planes examined (default: {DEFAULT_BUDGET})")
    parser_verify.add_argument("--seed", type=int, default=DEFAULT_SEED,
                               help=f"seed of the random plane sampler (default: {DEFAULT_SEED})")
    parser_verify.add_argument("--svg-out", help="write the witness section as SVG")
    parser_verify.add_argument("--workers", type=int, default=default_workers(),
                               help="threads used to evaluate planes")
    parser_verify.add_argument("--progress", action="store_true", help="show a progress bar on stderr")

    parser_screen = subparsers.add_parser("screen", help="Combinatorial screen only")
    _add_common(parser_screen)
    parser_screen.add_argument("--graphml-out", help="write the vertex graph as GraphML")

    parser_section = subparsers.add_parser("section", help="Metrics and tiler verdict of one section")
    _add_common(parser_section)
    parser_section.add_argument("--plane", required=True, help="plane a,b,c,d meaning a*x + b*y + c*z = d")
    parser_section.add_argument("--svg-out", help="write the section as SVG")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.function:
        parser.print_help()
        return

    configure_logging(args.verbose)
    handlers = {"verify": run_verify, "screen": run_screen, "section": run_section}
    try:
        code = handlers[args.function](args)
    except INPUT_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    except TilerScopeError as e:
        logger.debug("analysis failed", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_INTERNAL_ERROR)
    sys.exit(code)


if __name__ == "__main__":
    main()
