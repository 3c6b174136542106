"""Analysis summaries and parameter scans (no orbit integration).

The analyze document is the fast path: polynomials, roots, equilibrium
radius classes with kinds, node directions at infinity, theorem-bound
checks and the regime label where one exists.  Scans recompute it per grid
node and list the grid edges where the counting signature changes.
"""

from __future__ import annotations

import math
from dataclasses import replace

from .field import ModelParams, is_hamiltonian, normalize_rotation
from .equilibria import (
    IllConditionedRootsError,
    KIND_CENTER,
    KIND_STABLE_SPIRAL,
    KIND_UNSTABLE_SPIRAL,
    KIND_WEAK,
    angular_polynomial,
    build_radial_polynomials,
    dissipative_polynomial,
    general_radius_polynomial,
    origin_analysis,
    peripheral_equilibria,
    positive_roots,
    quasi_equilibria,
    radial_limit_cycles,
)
from .asymptotics import DegenerateEquatorError, equator_equilibria, existence_margin
from .patterns import REGIME_NONE, regime

RING_KINDS = {KIND_CENTER, KIND_STABLE_SPIRAL, KIND_UNSTABLE_SPIRAL}


def ring_bound(n: int) -> int:
    """Largest possible number of flower rings: (n-3)/2 odd, (n-2)/2 even."""
    return (n - 3) // 2 if n % 2 == 1 else (n - 2) // 2


def root_bound(n: int) -> int:
    """Largest possible positive-root count of one ring polynomial."""
    return (n - 1) // 2 if n % 2 == 1 else (n - 2) // 2


def analyze_params(p: ModelParams) -> dict:
    """Full analysis document for one coefficient set."""
    pn, beta = normalize_rotation(p)
    ham = is_hamiltonian(pn)
    degenerate: list[str] = []

    polys: dict[str, list[float]] = {}
    roots: dict[str, list[list[float]]] = {}
    classes: list[dict] = []
    try:
        if ham and pn.b1 != 0.0:
            ring_polys = build_radial_polynomials(pn)
            for tag in ("P0", "Pplus", "Pminus"):
                polys[tag] = list(ring_polys[tag].coefficients)
            for tag in ("Pplus", "Pminus"):
                roots[tag] = [[r, m] for r, m in positive_roots(ring_polys[tag])]
        else:
            polys["P1"] = list(dissipative_polynomial(pn).coefficients)
            polys["Q1"] = list(angular_polynomial(pn).coefficients)
            if pn.b1 != 0.0:
                g = general_radius_polynomial(pn)
                polys["F"] = list(g.coefficients)
                roots["F"] = [[r, m] for r, m in positive_roots(g)]
        peripheral = peripheral_equilibria(pn)
    except IllConditionedRootsError as exc:
        degenerate.append(f"root isolation at a bifurcation boundary: {exc}")
        peripheral = []

    seen: dict[int, dict] = {}
    for e in peripheral:
        seen.setdefault(e.radius_rank, {
            "r": e.r, "ray": e.ray, "kind": e.kind,
            "root_multiplicity": e.root_multiplicity,
            "trace": e.trace, "det": e.det,
        })
    classes = [seen[k] for k in sorted(seen)]
    if any(c["root_multiplicity"] >= 2 for c in classes):
        degenerate.append("tangent (multiple) equilibrium radius")
    if any(c["kind"] == KIND_WEAK for c in classes):
        degenerate.append("weak classification verdict at current tolerance")

    origin = origin_analysis(pn)
    if origin.kind == KIND_WEAK:
        degenerate.append("origin linearization vanishes")

    if ham and pn.b1 == 0.0:
        q1 = angular_polynomial(pn)
        if q1.degree > 0 and positive_roots(q1):
            degenerate.append("b = 0 Hamiltonian field: circles of non-isolated equilibria")

    equator: dict = {"margin": existence_margin(pn) if pn.a1 else None,
                     "nodes": [], "degenerate": None}
    try:
        nodes = equator_equilibria(pn)
        equator["nodes"] = [{"phi": nd.phi, "kind": nd.kind} for nd in nodes]
        equator["margin"] = nodes[0].existence_condition if nodes else existence_margin(pn)
    except DegenerateEquatorError as exc:
        equator["degenerate"] = str(exc)
        degenerate.append(str(exc))
    equator["spider_net_possible"] = bool(equator["nodes"])

    label = regime(pn)
    if label in ("on-boundary", "on-boundary-C"):
        degenerate.append(f"analytic regime boundary: {label}")

    ring_count = sum(1 for c in classes if c["kind"] in RING_KINDS)
    counts = {tag: len(rr) for tag, rr in roots.items()}
    checks = {
        "ring_bound": {"limit": ring_bound(pn.n), "count": ring_count,
                       "ok": ring_count <= ring_bound(pn.n)},
        "root_bound": {
            "limit": root_bound(pn.n),
            "counts": counts,
            "ok": all(v <= root_bound(pn.n) for k, v in counts.items() if k != "F"),
        },
    }
    if ham and pn.n % 2 == 0 and pn.b1 != 0.0 and "Pplus" in roots:
        total = counts["Pplus"] + counts["Pminus"]
        expected_odd = pn.b1 > abs(pn.a2[-1])
        checks["even_parity"] = {
            "total": total,
            "expected": "odd" if expected_odd else "even",
            "ok": (total % 2 == 1) == expected_odd,
        }

    return {
        "params": {"n": pn.n, "eps1": pn.eps1, "eps2": pn.eps2,
                   "a1": list(pn.a1), "a2": list(pn.a2),
                   "b1": pn.b1, "b2": pn.b2, "beta": beta},
        "hamiltonian": ham,
        "polynomials": polys,
        "roots": roots,
        "radius_classes": classes,
        "origin": {"kind": origin.kind, "eigenvalues": [[l.real, l.imag] for l in origin.eigenvalues]},
        "equilibrium_count": 1 + pn.n * len(classes),
        "quasi_equilibrium_radii": quasi_equilibria(pn),
        "limit_cycles": [{"r": r, "stability": st} for r, st in
                         (radial_limit_cycles(pn) if not ham else [])],
        "equator": equator,
        "theorem_checks": checks,
        "regime": None if label == REGIME_NONE else label,
        "degenerate": degenerate,
    }


_AXIS_FIELDS = ("eps1", "eps2", "b1", "b2")


def set_axis(p: ModelParams, axis: str, value: float) -> ModelParams:
    """Return params with one scalar coefficient replaced.

    Axis names: eps1, eps2, b1, b2, a1_1..a1_s, a2_1..a2_s.
    """
    if axis in _AXIS_FIELDS:
        return replace(p, **{axis: value})
    for prefix in ("a1", "a2"):
        if axis.startswith(prefix + "_"):
            k = int(axis.split("_")[1])
            if not 1 <= k <= p.s:
                raise ValueError(f"axis {axis}: index out of range for s={p.s}")
            coeffs = list(getattr(p, prefix))
            coeffs[k - 1] = value
            return replace(p, **{prefix: tuple(coeffs)})
    raise ValueError(f"unknown scan axis {axis!r}")


def _signature(doc: dict) -> dict:
    counts = {tag: len(rr) for tag, rr in doc["roots"].items()}
    return {
        "root_counts": counts,
        "total_roots": sum(counts.values()),
        "ring_count": doc["theorem_checks"]["ring_bound"]["count"],
        "spider_net": doc["equator"]["spider_net_possible"],
        "regime": doc["regime"],
    }


def _diff_keys(sig_a: dict, sig_b: dict) -> list[str]:
    keys = ["total_roots", "ring_count", "spider_net", "regime"]
    changed = [k for k in keys if sig_a[k] != sig_b[k]]
    # per-polynomial counts only compare when the polynomial sets match
    # (b = 0 and b != 0 nodes factor the radii differently)
    if set(sig_a["root_counts"]) == set(sig_b["root_counts"]) and \
            sig_a["root_counts"] != sig_b["root_counts"] and \
            "total_roots" not in changed:
        changed.append("root_counts")
    return changed


def scan_1d(p: ModelParams, axis: str, lo: float, hi: float, cells: int) -> dict:
    """Analyze on a uniform grid and diff consecutive regular nodes.

    Returns the per-node summaries plus the transitions list: intervals
    between consecutive non-degenerate nodes whose counting signature
    (root counts, ring count, spider-net flag, regime) changes.  Nodes
    sitting exactly on analytic boundaries are flagged and excluded from
    the diff, so a transition interval contains the boundary instead of
    being split by it.
    """
    if cells < 1 or not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        raise ValueError("scan needs a finite grid with hi > lo and cells >= 1")
    values = [lo + (hi - lo) * i / cells for i in range(cells + 1)]
    nodes = []
    for v in values:
        doc = analyze_params(set_axis(p, axis, v))
        nodes.append({
            "value": v,
            "signature": _signature(doc),
            "degenerate": doc["degenerate"],
            "summary": {
                "radius_classes": doc["radius_classes"],
                "regime": doc["regime"],
            },
        })
    regular = [nd for nd in nodes if not nd["degenerate"]]
    transitions = []
    for a, b in zip(regular, regular[1:]):
        changed = _diff_keys(a["signature"], b["signature"])
        if changed:
            transitions.append({
                "axis": axis,
                "lo": a["value"],
                "hi": b["value"],
                "changed": changed,
                "from": a["signature"],
                "to": b["signature"],
            })
    return {"axis": axis, "lo": lo, "hi": hi, "cells": cells,
            "nodes": nodes, "transitions": transitions}


def scan_2d(p: ModelParams, axis1: str, lo1: float, hi1: float, cells1: int,
            axis2: str, lo2: float, hi2: float, cells2: int) -> dict:
    """Two-axis scan: signatures per node plus transition edges on both axes."""
    v1 = [lo1 + (hi1 - lo1) * i / cells1 for i in range(cells1 + 1)]
    v2 = [lo2 + (hi2 - lo2) * j / cells2 for j in range(cells2 + 1)]
    grid = []
    for x in v1:
        row = []
        for yv in v2:
            doc = analyze_params(set_axis(set_axis(p, axis1, x), axis2, yv))
            row.append({"value": [x, yv], "signature": _signature(doc),
                        "degenerate": doc["degenerate"]})
        grid.append(row)
    transitions = []
    for i in range(len(v1)):
        for j in range(len(v2)):
            if grid[i][j]["degenerate"]:
                continue
            sig = grid[i][j]["signature"]
            for di, dj in ((1, 0), (0, 1)):
                ii, jj = i + di, j + dj
                if ii > cells1 or jj > cells2 or grid[ii][jj]["degenerate"]:
                    continue
                other = grid[ii][jj]["signature"]
                changed = _diff_keys(sig, other)
                if changed:
                    transitions.append({
                        "from_node": [v1[i], v2[j]],
                        "to_node": [v1[ii], v2[jj]],
                        "changed": changed,
                    })
    return {"axis1": axis1, "axis2": axis2, "grid": grid, "transitions": transitions}
