"""Portrait serialization: a documented JSON schema and layered SVG.

JSON documents are byte-stable for identical inputs: equilibria ordered by
(radius, angle), separatrices by saddle id, floats emitted at full
round-trip precision, never NaN/Inf (escaped orbits are truncated at the
escape radius by the integrator).  The schema ships at
docs/portrait.schema.json.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .field import PolarPoint
from .patterns import PatternReport, Portrait

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class RenderStyle:
    """Canvas window and drawing parameters for the SVG renderer."""

    window: float | None = None      # half-width; None picks 1.25 * outermost radius
    size_px: int = 800
    orbit_width: float = 1.0
    separatrix_width: float = 1.6
    marker_size: float = 7.0
    orbit_color: str = "#4477aa"
    separatrix_color: str = "#cc3311"
    saddle_color: str = "#000000"
    center_color: str = "#228833"
    spiral_color: str = "#aa3377"
    equator_color: str = "#ee7733"
    max_polyline_points: int = 4000

    def resolved_window(self, pt: Portrait) -> float:
        if self.window is not None:
            return self.window
        r = pt.outermost_radius
        return r / 0.8 if r > 0 else 1.25


def decimate_polyline(points: list[tuple[float, float]], cap: int) -> list[tuple[float, float]]:
    """Curvature-weighted subsampling to at most ``cap`` points.

    Interior points are ranked by accumulated turn angle plus a small
    arc-length term so straight runs thin out first; endpoints always stay.
    """
    m = len(points)
    if m <= cap:
        return list(points)
    weights = [0.0] * m
    total_len = 0.0
    for i in range(1, m - 1):
        ax, ay = points[i - 1]
        bx, by = points[i]
        cx, cy = points[i + 1]
        v1x, v1y = bx - ax, by - ay
        v2x, v2y = cx - bx, cy - by
        turn = abs(math.atan2(v1x * v2y - v1y * v2x, v1x * v2x + v1y * v2y))
        seg = math.hypot(v1x, v1y)
        total_len += seg
        weights[i] = turn + 1e-9
    for i in range(1, m - 1):
        ax, ay = points[i - 1]
        bx, by = points[i]
        weights[i] += 0.1 * math.hypot(bx - ax, by - ay) / max(total_len, 1e-300)
    cum = [0.0]
    for i in range(1, m - 1):
        cum.append(cum[-1] + weights[i])
    total = cum[-1]
    out = [points[0]]
    target = total / max(cap - 1, 1)
    acc = 0.0
    for i in range(1, m - 1):
        acc += weights[i]
        if acc >= target:
            out.append(points[i])
            acc = 0.0
        if len(out) >= cap - 1:
            break
    out.append(points[-1])
    return out


def _eq_doc(e) -> dict:
    return {
        "id": e.eq_id,
        "locus": e.locus,
        "r": e.r,
        "phi": e.phi,
        "ray": e.ray,
        "kind": e.kind,
        "multiplicity": e.multiplicity,
        "root_multiplicity": e.root_multiplicity,
        "trace": e.trace,
        "det": e.det,
        "eigenvalues": [[l.real, l.imag] for l in e.eigenvalues],
    }


def _finite_points(points):
    return [[x, y] for x, y in points if math.isfinite(x) and math.isfinite(y)]


def _report_doc(report: PatternReport | None) -> dict | None:
    if report is None:
        return None
    return {
        "centroids": report.centroids,
        "flower_rings": report.flower_rings,
        "n_cycles": report.n_cycles,
        "spider_net": report.spider_net,
        "indeterminacy": report.indeterminacy,
        "regime": report.regime_label,
        "unresolved": report.unresolved,
    }


def portrait_document(pt: Portrait, report: PatternReport | None = None,
                      max_points: int = 4000) -> dict:
    """Plain-dict form of a portrait plus optional pattern report."""
    p = pt.params
    eqs = sorted(pt.equilibria, key=lambda e: (e.r, e.phi))
    seps = []
    for sset in sorted(pt.separatrices, key=lambda s: s.saddle_id):
        seps.append({
            "saddle_id": sset.saddle_id,
            "branches": [
                {
                    "manifold": br.manifold,
                    "orientation": br.orientation,
                    "connection": {"kind": br.connection.kind, "target": br.connection.target_id},
                    "points": _finite_points(decimate_polyline(br.orbit.points, max_points)),
                }
                for br in sset.branches
            ],
        })
    orbits = []
    for o in pt.orbits:
        term = o.termination
        orbits.append({
            "termination": {
                "kind": term.kind,
                "period": term.period,
                "exit_radius": term.exit_radius,
                "exit_angle": term.exit_angle,
                "equilibrium_id": term.equilibrium_id,
            },
            "h_drift": o.h_drift,
            "points": _finite_points(decimate_polyline(o.points, max_points)),
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {
            "n": p.n, "eps1": p.eps1, "eps2": p.eps2,
            "a1": list(p.a1), "a2": list(p.a2),
            "b1": p.b1, "b2": p.b2, "beta": pt.beta,
        },
        "hamiltonian": pt.hamiltonian,
        "degenerate": list(pt.degenerate),
        "equilibria": [_eq_doc(e) for e in eqs],
        "separatrices": seps,
        "orbits": orbits,
        "equator_nodes": [
            {"phi": nd.phi, "kind": nd.kind, "margin": nd.existence_condition}
            for nd in pt.equator_nodes
        ],
        "quasi_equilibrium_radii": list(pt.quasi_radii),
        "limit_cycles": [
            {"r": r, "stability": st, "approximate": approx}
            for r, st, approx in pt.limit_cycles
        ],
        "pattern_report": _report_doc(report),
    }


def to_json(pt: Portrait, report: PatternReport | None = None,
            max_points: int = 4000) -> str:
    """Serialize; floats keep full precision, ordering is deterministic."""
    doc = portrait_document(pt, report, max_points)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)


def parse_portrait_json(text: str) -> dict:
    return json.loads(text)


# --- SVG -----------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _path(points, transform, stroke, width, cls) -> str:
    if len(points) < 2:
        return ""
    coords = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (transform(x, y) for x, y in points))
    return f'<polyline class="{cls}" fill="none" stroke="{stroke}" stroke-width="{_fmt(width)}" points="{coords}"/>'


def _marker(e, transform, style: RenderStyle) -> str:
    c = PolarPoint(e.r, e.phi).to_cartesian()
    px, py = transform(c.x, c.y)
    s = style.marker_size / 2.0
    if e.kind == "saddle":
        return (
            f'<g class="marker saddle" data-id="{e.eq_id}" data-x="{_fmt(px)}" data-y="{_fmt(py)}">'
            f'<line x1="{_fmt(px - s)}" y1="{_fmt(py - s)}" x2="{_fmt(px + s)}" y2="{_fmt(py + s)}" stroke="{style.saddle_color}" stroke-width="1.5"/>'
            f'<line x1="{_fmt(px - s)}" y1="{_fmt(py + s)}" x2="{_fmt(px + s)}" y2="{_fmt(py - s)}" stroke="{style.saddle_color}" stroke-width="1.5"/>'
            f"</g>"
        )
    if e.kind == "center":
        return (f'<circle class="marker center" data-id="{e.eq_id}" data-x="{_fmt(px)}" data-y="{_fmt(py)}" '
                f'cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(s * 0.6)}" fill="{style.center_color}"/>')
    if e.kind.endswith("spiral"):
        turns = 2.0
        pts = []
        for i in range(25):
            a = turns * TWO_PI_SVG * i / 24
            rr = s * i / 24
            pts.append((px + rr * math.cos(a), py + rr * math.sin(a)))
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        return (f'<polyline class="marker spiral" data-id="{e.eq_id}" data-x="{_fmt(px)}" data-y="{_fmt(py)}" '
                f'fill="none" stroke="{style.spiral_color}" stroke-width="1.2" points="{coords}"/>')
    return (f'<circle class="marker other" data-id="{e.eq_id}" data-x="{_fmt(px)}" data-y="{_fmt(py)}" '
            f'cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(s * 0.5)}" fill="none" stroke="{style.saddle_color}"/>')


TWO_PI_SVG = 2.0 * math.pi


def to_svg(pt: Portrait, style: RenderStyle | None = None) -> str:
    """Single-document SVG: orbits under separatrices under markers.

    Saddles render as crosses, centers as dots, spirals as spiral glyphs,
    node directions at infinity as ticks on the window border.
    """
    style = style or RenderStyle()
    w = style.resolved_window(pt)
    size = style.size_px
    scale = size / (2.0 * w)

    def tf(x: float, y: float) -> tuple[float, float]:
        return (x + w) * scale, (w - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        '<g id="orbits">',
    ]
    for o in pt.orbits:
        pts = decimate_polyline(o.points, style.max_polyline_points)
        pts = [(x, y) for x, y in pts if abs(x) <= 4 * w and abs(y) <= 4 * w]
        parts.append(_path(pts, tf, style.orbit_color, style.orbit_width, "orbit"))
    parts.append("</g>")
    parts.append('<g id="separatrices">')
    for sset in sorted(pt.separatrices, key=lambda s: s.saddle_id):
        for br in sset.branches:
            pts = decimate_polyline(br.orbit.points, style.max_polyline_points)
            pts = [(x, y) for x, y in pts if abs(x) <= 4 * w and abs(y) <= 4 * w]
            parts.append(_path(pts, tf, style.separatrix_color, style.separatrix_width,
                               f"separatrix {br.manifold}"))
    parts.append("</g>")
    parts.append('<g id="equator">')
    tick = 0.04 * size
    for nd in pt.equator_nodes:
        ex, ey = math.cos(nd.phi), math.sin(nd.phi)
        # intersect the direction ray with the window border
        t_edge = w / max(abs(ex), abs(ey))
        bx, by = tf(ex * t_edge, ey * t_edge)
        ix, iy = tf(ex * t_edge * 0.96, ey * t_edge * 0.96)
        dash = "" if nd.stable else ' stroke-dasharray="3,2"'
        parts.append(
            f'<line class="equator {nd.kind}" x1="{_fmt(bx)}" y1="{_fmt(by)}" '
            f'x2="{_fmt(ix)}" y2="{_fmt(iy)}" stroke="{style.equator_color}" stroke-width="2"{dash}/>'
        )
    parts.append("</g>")
    parts.append('<g id="markers">')
    for e in sorted(pt.equilibria, key=lambda q: (q.r, q.phi)):
        parts.append(_marker(e, tf, style))
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(p for p in parts if p)
