"""Acceptance criteria, one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdicts and
timings.  Tolerances are pinned here, not configurable.
"""

import math
import time

import numpy as np
import pytest

from meander.field import CartPoint, ModelParams, PolarPoint, eval_polar, hamiltonian, normalize_rotation
from meander.equilibria import (
    IllConditionedRootsError,
    build_radial_polynomials,
    origin_analysis,
    peripheral_equilibria,
    positive_roots,
)
from meander.asymptotics import equator_equilibria
from meander.integrator import IntegrateOptions, destination_census
from meander.patterns import PortraitOptions, boundary_c_threshold, build_portrait, classify_patterns
from meander.reports import analyze_params, ring_bound, root_bound, scan_1d
from conftest import random_params

TWO_PI = 2 * math.pi


def _verdict(name: str, ok: bool, elapsed: float, budget: float):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status} ({elapsed:.2f}s / budget {budget:.0f}s)")
    assert ok, name
    assert elapsed < budget, f"{name} exceeded its runtime budget"


def test_example1_exactness():
    """Ring radii {1, 2} and {2/3} to 1e-9, kinds saddle/center/saddle,
    one flower ring = (n-3)/2; under one second."""
    t0 = time.time()
    p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0)
    polys = build_radial_polynomials(p)
    rp = [r for r, _ in positive_roots(polys["Pplus"])]
    rm = [r for r, _ in positive_roots(polys["Pminus"])]
    ok = (len(rp) == 2 and abs(rp[0] - 1.0) < 1e-9 and abs(rp[1] - 2.0) < 1e-9
          and len(rm) == 1 and abs(rm[0] - 2.0 / 3.0) < 1e-9)
    classes = {e.radius_rank: e.kind for e in peripheral_equilibria(p)}
    ok = ok and [classes[k] for k in sorted(classes)] == ["saddle", "center", "saddle"]
    doc = analyze_params(p)
    rings = doc["theorem_checks"]["ring_bound"]["count"]
    ok = ok and rings == 1 == (5 - 3) // 2
    _verdict("example1-exactness", ok, time.time() - t0, 1.0)


def test_example2_regime_map():
    """Root-count transitions of the n = 4 sweep land exactly at b = |a2_1|,
    with the detected interval containing the analytic boundary."""
    t0 = time.time()
    ok = True
    for a2, lo_count, hi_count in ((1.0, 0, 1), (-1.0, 2, 1)):
        p = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(a2,), b1=0.0)
        res = scan_1d(p, "b1", 0.0, 2.0, 40)
        trans = [t for t in res["transitions"] if "total_roots" in t["changed"]]
        ok = ok and len(trans) == 1
        if trans:
            ok = ok and trans[0]["lo"] <= abs(a2) <= trans[0]["hi"]
            ok = ok and trans[0]["from"]["total_roots"] == lo_count
            ok = ok and trans[0]["to"]["total_roots"] == hi_count
    _verdict("example2-regime-map", ok, time.time() - t0, 5.0)


def test_boundary_c_location():
    """The n = 5 sweep brackets the ring-birth coefficient within one grid
    cell of the closed-form solve of the cubic boundary."""
    t0 = time.time()
    astar = boundary_c_threshold(-4.0, 3.0)
    assert astar == pytest.approx(243.0 ** (1.0 / 3.0), rel=1e-12)
    p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(0.0,), b1=3.0)
    res = scan_1d(p, "a2_1", -2.0, 8.0, 50)
    trans = [t for t in res["transitions"] if "ring_count" in t["changed"]]
    ok = len(trans) == 1 and trans[0]["lo"] <= astar <= trans[0]["hi"]
    cell = (8.0 - (-2.0)) / 50
    ok = ok and (trans[0]["hi"] - trans[0]["lo"]) <= cell * (1 + 1e-12)
    _verdict("boundary-C-location", ok, time.time() - t0, 10.0)


def test_theorem_bounds_random_sweep():
    """10^4 random Hamiltonian draws per n in 4..11: ring and root bounds
    hold with zero violations and the even-n total parity follows the sign
    of b - |a2_s|."""
    t0 = time.time()
    rng = np.random.default_rng(20260809)
    violations = 0
    for n in range(4, 12):
        s = n // 2 - 1
        done = 0
        while done < 10_000:
            eps2 = rng.uniform(-3, 3)
            if abs(eps2) < 1e-3:
                continue
            a2 = tuple(rng.uniform(-3, 3, size=s))
            b = rng.uniform(1e-3, 3.0)
            if n % 2 == 0 and abs(b - abs(a2[-1])) < 1e-6:
                continue
            p = ModelParams(n=n, eps2=eps2, a1=(0.0,) * s, a2=a2, b1=b)
            polys = build_radial_polynomials(p)
            try:
                rp = positive_roots(polys["Pplus"])
                rm = positive_roots(polys["Pminus"])
            except IllConditionedRootsError:
                continue
            done += 1
            if len(rp) > root_bound(n) or len(rm) > root_bound(n):
                violations += 1
            dp = polys["Pplus"].derivative()
            dm = polys["Pminus"].derivative()
            centers = (sum(1 for r, _ in rp if dp(r) > 0)
                       + sum(1 for r, _ in rm if dm(r) < 0))
            if centers > ring_bound(n):
                violations += 1
            if n % 2 == 0:
                total = len(rp) + len(rm)
                if (total % 2 == 1) != (b > abs(a2[-1])):
                    violations += 1
    _verdict("theorem-bounds-10k-per-n", violations == 0, time.time() - t0, 60.0)


def test_hamiltonian_conservation():
    """Energy drift at most 1e-6 * (1 + |H0|) on every sample orbit of the
    two reference portraits, each closed orbit followed for >= 10 loops."""
    t0 = time.time()
    ok = True
    for p in (ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0),
              ModelParams(n=6, eps2=1.0, a1=(0.0, 0.0), a2=(-1.0, 0.1), b1=0.06)):
        pt = build_portrait(p, PortraitOptions(min_loops=10, orbit_max_time=2000.0,
                                               trace_saddles=False))
        assert pt.orbits
        for o in pt.orbits:
            t_start, x, y = o.samples[0]
            h0 = hamiltonian(pt.params, CartPoint(x, y).to_polar())
            ok = ok and o.h_drift is not None and o.h_drift <= 1e-6 * (1 + abs(h0))
            if o.termination.kind == "closed":
                ok = ok and o.loops >= 10
    _verdict("hamiltonian-conservation", ok, time.time() - t0, 10.0)


def test_equator_census():
    """n = 5: five stable plus five unstable alternating directions; n = 4:
    none below the margin, present above it."""
    t0 = time.time()
    p5 = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0)
    nodes = equator_equilibria(p5)
    stable = [nd for nd in nodes if nd.stable]
    ordered = sorted(nodes, key=lambda nd: nd.phi)
    ok = (len(nodes) == 10 and len(stable) == 5
          and all(a.stable != b.stable for a, b in zip(ordered, ordered[1:])))
    p4_low = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=0.7)
    p4_high = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=1.2)
    ok = ok and equator_equilibria(p4_low) == []
    ok = ok and len(equator_equilibria(p4_high)) > 0
    _verdict("equator-census", ok, time.time() - t0, 5.0)


def test_two_ring_portrait():
    """n = 6 preset radii match the closed-form quartic roots to 1e-9,
    alternate saddle/center/saddle/center, and report two flower rings."""
    t0 = time.time()
    p = ModelParams(n=6, eps2=1.0, a1=(0.0, 0.0), a2=(-1.0, 0.1), b1=0.06)
    sq = math.sqrt(0.84)
    expected = sorted([
        math.sqrt((1 - sq) / 0.08), math.sqrt((1 + sq) / 0.08),
        math.sqrt(1.25), math.sqrt(5.0),
    ])
    pt = build_portrait(p)
    classes = pt.radius_classes
    radii = [r for r, _ in classes]
    kinds = [k for _, k in classes]
    ok = (len(radii) == 4
          and all(abs(a - b) < 1e-9 for a, b in zip(radii, expected))
          and kinds == ["saddle", "center", "saddle", "center"]
          and len(pt.peripheral) == 24)
    rep = classify_patterns(pt)
    ok = ok and rep.flower_rings["count"] == 2
    _verdict("two-ring-portrait", ok, time.time() - t0, 30.0)


def test_dynamical_indeterminacy_census():
    """Seeds between the radial limit cycle and the saddle ring reach all
    five peripheral spiral destinations."""
    t0 = time.time()
    p = ModelParams(n=5, eps1=0.005, eps2=1.0, a1=(-0.01,), a2=(-1.0,), b1=0.1)
    eqs = [origin_analysis(p)] + peripheral_equilibria(p)
    spiral_ids = {e.eq_id for e in eqs if e.kind.endswith("spiral") and e.locus == "peripheral"}
    assert len(spiral_ids) == 5
    res = destination_census(p, (0.85, 100), eqs,
                             IntegrateOptions(max_time=300.0, escape_radius=500.0,
                                              rtol=1e-8, atol=1e-10))
    reached = spiral_ids & set(res.forward)
    ok = reached == spiral_ids
    _verdict("dynamical-indeterminacy-census", ok, time.time() - t0, 30.0)


@pytest.mark.xfail(
    strict=True,
    reason="stated expectation contradicts the divergence identity: at the "
    "spiral radius r* of these coefficients, trace = 2*(eps1 + 2*a1_1*r*^2) "
    "= -0.035 < 0, so the peripheral spirals attract; see the decisions "
    "ledger entry on the dissipative-classification criterion",
)
def test_dissipative_spirals_unstable_as_stated():
    """Criterion text: peripheral non-saddles classify as unstable spirals."""
    p = ModelParams(n=5, eps1=0.005, eps2=1.0, a1=(-0.01,), a2=(-1.0,), b1=0.1)
    non_saddles = [e for e in peripheral_equilibria(p) if not e.is_saddle]
    assert non_saddles
    assert all(e.kind == "unstable-spiral" for e in non_saddles), (
        f"classified {sorted({e.kind for e in non_saddles})}"
    )


def test_cross_representation_consistency():
    """1000 random samples: polar/Cartesian identity and sector-rotation
    equivariance to 1e-12 relative."""
    t0 = time.time()
    rng = np.random.default_rng(42)
    from meander.field import cart_to_polar_velocity, eval_cartesian

    worst_id = worst_eq = 0.0
    for _ in range(1000):
        n = int(rng.choice([4, 5, 6, 7, 8, 9, 10, 11]))
        p = random_params(rng, n, hamiltonian=bool(rng.integers(0, 2)))
        pn, _ = normalize_rotation(p)
        r = float(rng.uniform(0.01, 3.0))
        phi = float(rng.uniform(0, TWO_PI))
        pol = PolarPoint(r, phi)
        pv = eval_polar(pn, pol)
        cv = eval_cartesian(pn, pol.to_cartesian())
        back = cart_to_polar_velocity(pol.to_cartesian(), cv)
        scale = max(1.0, abs(pv.dr), r * abs(pv.dphi))
        worst_id = max(worst_id, abs(back.dr - pv.dr) / scale,
                       r * abs(back.dphi - pv.dphi) / scale)
        v2 = eval_polar(pn, PolarPoint(r, phi + TWO_PI / n))
        scale2 = max(1.0, abs(pv.dr), abs(pv.dphi))
        worst_eq = max(worst_eq, abs(pv.dr - v2.dr) / scale2,
                       abs(pv.dphi - v2.dphi) / scale2)
    ok = worst_id < 1e-12 and worst_eq < 1e-12
    _verdict("cross-representation", ok, time.time() - t0, 1.0)
