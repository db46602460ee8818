"""SVG drawings of sections in their carrier plane."""

from __future__ import annotations

import io

import numpy as np
from matplotlib import patches, rc_context
from matplotlib.figure import Figure

from tilerscope.geometry.section import SectionPolygon
from tilerscope.search.witness import Witness
from tilerscope.tiling.metrics import planar_points

_SVG_RC = {"svg.hashsalt": "tilerscope", "svg.fonttype": "none", "font.size": 9}


def _interior_angles(pts: np.ndarray) -> np.ndarray:
    back = np.roll(pts, 1, axis=0) - pts
    ahead = np.roll(pts, -1, axis=0) - pts
    cross = back[:, 0] * ahead[:, 1] - back[:, 1] * ahead[:, 0]
    return np.degrees(np.arctan2(np.abs(cross), np.einsum("ij,ij->i", back, ahead)))


def _angle_labels(pts: np.ndarray) -> list[str]:
    return [f"{a:.1f}°" for a in _interior_angles(pts)]


def _length_labels(pts: np.ndarray) -> list[str]:
    return [f"{L:.6g}" for L in np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)]


def angle_labels(section: SectionPolygon) -> list[str]:
    return _angle_labels(planar_points(section))


def length_labels(section: SectionPolygon) -> list[str]:
    """Edge labels in drawing order; edge k runs from vertex k to vertex k+1."""
    return _length_labels(planar_points(section))


def _draw(pts: np.ndarray, title: str | None) -> bytes:
    pts = pts - pts.mean(axis=0)
    span = float(np.max(np.abs(pts))) or 1.0

    with rc_context(_SVG_RC):
        fig = Figure(figsize=(5, 5))
        ax = fig.add_subplot(111)
        ax.set_axis_off()
        ax.set_aspect("equal")
        ax.add_patch(patches.Polygon(pts, closed=True, facecolor="#dde8f3", edgecolor="black", linewidth=1.2))
        ax.plot(pts[:, 0], pts[:, 1], "o", color="black", markersize=3)

        for k, label in enumerate(_length_labels(pts)):
            a, b = pts[k], pts[(k + 1) % len(pts)]
            mid = (a + b) / 2.0
            along = b - a
            outward = np.array([along[1], -along[0]]) / (np.linalg.norm(along) or 1.0)
            spot = mid + 0.08 * span * outward
            ax.text(spot[0], spot[1], label, ha="center", va="center", color="#1f4e79")

        for k, label in enumerate(_angle_labels(pts)):
            inward = -pts[k] / (np.linalg.norm(pts[k]) or 1.0)
            spot = pts[k] + 0.15 * span * inward
            ax.text(spot[0], spot[1], label, ha="center", va="center", color="#7f2704", fontsize=8)

        margin = 0.3 * span
        ax.set_xlim(-span - margin, span + margin)
        ax.set_ylim(-span - margin, span + margin)
        if title:
            ax.set_title(title)

        out = io.BytesIO()
        fig.savefig(out, format="svg", metadata={"Date": None})
    return out.getvalue()


def render_section_svg(section: SectionPolygon, title: str | None = None) -> bytes:
    return _draw(planar_points(section), title)


def render_witness_svg(witness: Witness) -> bytes:
    title = f"{witness.section.n}-gon, {witness.failure.value} ({witness.provenance.sampler})"
    return _draw(planar_points(witness.section), title)
