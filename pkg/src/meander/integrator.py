"""Orbit integration, termination verdicts and separatrix tracing.

Propagation is Cartesian (the polar form is singular at r = 0 and stiff
near quasi-equilibrium circles where phi' ~ 0) with an adaptive
Dormand-Prince 5(4) stepper.  Each accepted step is checked for escape,
capture by an equilibrium, and closure: a crossing of the ray through the
start point after at least one full winding, refined by bisection on the
local Hermite interpolant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import (
    CartPoint,
    ModelParams,
    PolarPoint,
    hamiltonian,
    is_hamiltonian,
    make_field,
    cartesian_jacobian,
)
from .equilibria import Equilibrium

TWO_PI = 2.0 * math.pi

# Dormand-Prince 5(4) tableau
_A21 = 1 / 5
_A31, _A32 = 3 / 40, 9 / 40
_A41, _A42, _A43 = 44 / 45, -56 / 15, 32 / 9
_A51, _A52, _A53, _A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
_A61, _A62, _A63, _A64, _A65 = 9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656
_B1, _B3, _B4, _B5, _B6 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71 / 57600, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40,
)


@dataclass(frozen=True)
class CaptureBall:
    x: float
    y: float
    radius: float
    target_id: str
    is_saddle: bool = False


@dataclass
class IntegrateOptions:
    max_time: float = 300.0
    escape_radius: float = 1e3
    closure_tol: float = 1e-6
    detect_closure: bool = True
    min_loops: int = 1            # full returns required before the closed verdict
    rtol: float = 1e-10
    atol: float = 1e-12
    max_steps: int = 400_000
    capture: tuple[CaptureBall, ...] = ()
    record_every: int = 1


@dataclass(frozen=True)
class Termination:
    kind: str                    # closed | escaped | converged | max_time
    period: float | None = None
    exit_radius: float | None = None
    exit_angle: float | None = None
    equilibrium_id: str | None = None
    diagnostic: str | None = None


@dataclass
class Orbit:
    samples: list[tuple[float, float, float]]  # (t, x, y)
    termination: Termination
    h_drift: float | None = None             # max |H - H0| when Hamiltonian
    windings: float = 0.0                    # net turns around the origin
    loops: int = 0                           # completed returns to the start section

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(x, y) for _, x, y in self.samples]


def _hermite(p0, f0, p1, f1, h, tau):
    """Cubic Hermite interpolation on one step, tau in [0, 1]."""
    t2 = tau * tau
    t3 = t2 * tau
    h00 = 2 * t3 - 3 * t2 + 1
    h10 = t3 - 2 * t2 + tau
    h01 = -2 * t3 + 3 * t2
    h11 = t3 - t2
    x = h00 * p0[0] + h10 * h * f0[0] + h01 * p1[0] + h11 * h * f1[0]
    y = h00 * p0[1] + h10 * h * f0[1] + h01 * p1[1] + h11 * h * f1[1]
    return x, y


def _segment_closest(ax, ay, bx, by, cx, cy):
    """Closest point parameter and distance from segment a-b to point c."""
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        return 0.0, math.hypot(ax - cx, ay - cy)
    tau = max(0.0, min(1.0, ((cx - ax) * dx + (cy - ay) * dy) / denom))
    qx, qy = ax + tau * dx, ay + tau * dy
    return tau, math.hypot(qx - cx, qy - cy)


def integrate_orbit(
    p: ModelParams,
    start: CartPoint,
    opts: IntegrateOptions | None = None,
    direction: int = 1,
) -> Orbit:
    """Integrate one orbit until it closes, escapes, converges or times out.

    ``direction = -1`` integrates the time-reversed field.  Capture balls
    (typically centered at known equilibria) yield ``converged`` verdicts;
    a ball containing the start point is armed only after the orbit leaves
    it, and passage is tested against the whole step segment so fast
    transits cannot jump over a ball.  Closure is a return to the start
    point through the transversal section there (the line through the start
    perpendicular to the initial velocity), which also catches loops that
    do not encircle the origin.  When the coefficients are Hamiltonian the
    energy drift along the samples is recorded.
    """
    opts = opts or IntegrateOptions()
    raw = make_field(p)
    sgn = 1.0 if direction >= 0 else -1.0
    # beyond a few escape radii the blow-up field can overflow inside trial
    # stages; clamp smoothly so the error controller rejects such steps
    big = 16.0 * opts.escape_radius
    cap = 1e30

    def f(x: float, y: float) -> tuple[float, float]:
        if x * x + y * y > big * big:
            rr = math.hypot(x, y)
            x, y = x * big / rr, y * big / rr
        try:
            dx, dy = raw(x, y)
        except OverflowError:
            return (cap * sgn, cap * sgn)
        if not (math.isfinite(dx) and math.isfinite(dy)):
            return (cap * sgn, cap * sgn)
        m = max(abs(dx), abs(dy))
        if m > cap:
            dx, dy = dx * cap / m, dy * cap / m
        return (sgn * dx, sgn * dy)

    x, y = start.x, start.y
    t = 0.0
    r0 = math.hypot(x, y)
    ham = is_hamiltonian(p) and p.is_normalized
    h0 = hamiltonian(p, PolarPoint(r0, math.atan2(y, x))) if ham else None
    drift = 0.0 if ham else None

    fx, fy = f(x, y)
    speed0 = math.hypot(fx, fy)
    if speed0 <= opts.atol * 10 * (1.0 + r0):
        eq_id = _nearest_capture_id(x, y, opts.capture)
        if eq_id is None and r0 < 1e-9:
            eq_id = "O"
        return Orbit(
            samples=[(0.0, x, y)],
            termination=Termination(kind="converged", equilibrium_id=eq_id),
            h_drift=drift,
        )

    armed = [not (math.hypot(x - cb.x, y - cb.y) <= 2.0 * cb.radius) for cb in opts.capture]

    # transversal section through the start point
    tx, ty = fx / speed0, fy / speed0
    g_prev = 0.0
    section_armed = False
    ctol = opts.closure_tol * max(1.0, r0)
    loops = 0
    t_first_return = None
    theta = 0.0

    samples = [(0.0, x, y)]
    h = min(0.01 * (1.0 + r0) / speed0, opts.max_time / 10)
    nsteps = 0
    rec = 0
    while t < opts.max_time:
        if nsteps >= opts.max_steps:
            return Orbit(samples, Termination(kind="max_time", diagnostic="step budget exhausted"),
                         h_drift=drift, windings=theta / TWO_PI, loops=loops)
        if h < 1e-14 * max(1.0, abs(t)):
            return Orbit(samples, Termination(kind="max_time", diagnostic="step size underflow"),
                         h_drift=drift, windings=theta / TWO_PI, loops=loops)
        h = min(h, opts.max_time - t)
        # one DP45 attempt
        k1x, k1y = fx, fy
        k2x, k2y = f(x + h * _A21 * k1x, y + h * _A21 * k1y)
        k3x, k3y = f(x + h * (_A31 * k1x + _A32 * k2x), y + h * (_A31 * k1y + _A32 * k2y))
        k4x, k4y = f(x + h * (_A41 * k1x + _A42 * k2x + _A43 * k3x),
                     y + h * (_A41 * k1y + _A42 * k2y + _A43 * k3y))
        k5x, k5y = f(x + h * (_A51 * k1x + _A52 * k2x + _A53 * k3x + _A54 * k4x),
                     y + h * (_A51 * k1y + _A52 * k2y + _A53 * k3y + _A54 * k4y))
        k6x, k6y = f(x + h * (_A61 * k1x + _A62 * k2x + _A63 * k3x + _A64 * k4x + _A65 * k5x),
                     y + h * (_A61 * k1y + _A62 * k2y + _A63 * k3y + _A64 * k4y + _A65 * k5y))
        xn = x + h * (_B1 * k1x + _B3 * k3x + _B4 * k4x + _B5 * k5x + _B6 * k6x)
        yn = y + h * (_B1 * k1y + _B3 * k3y + _B4 * k4y + _B5 * k5y + _B6 * k6y)
        k7x, k7y = f(xn, yn)
        ex = h * (_E1 * k1x + _E3 * k3x + _E4 * k4x + _E5 * k5x + _E6 * k6x + _E7 * k7x)
        ey = h * (_E1 * k1y + _E3 * k3y + _E4 * k4y + _E5 * k5y + _E6 * k6y + _E7 * k7y)
        sx = opts.atol + opts.rtol * max(abs(x), abs(xn))
        sy = opts.atol + opts.rtol * max(abs(y), abs(yn))
        err = math.sqrt(0.5 * ((ex / sx) ** 2 + (ey / sy) ** 2))
        if err > 1.0:
            h *= max(0.2, 0.9 * err ** -0.2)
            nsteps += 1
            continue
        # accepted
        nsteps += 1
        t_new = t + h
        p_old, f_old = (x, y), (k1x, k1y)
        p_new, f_new = (xn, yn), (k7x, k7y)

        theta += math.atan2(x * yn - y * xn, x * xn + y * yn)

        r_new = math.hypot(xn, yn)
        # escape: refine the crossing of |p| = escape_radius within the step
        if r_new >= opts.escape_radius:
            lo, hi = 0.0, 1.0
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                qx, qy = _hermite(p_old, f_old, p_new, f_new, h, mid)
                if math.hypot(qx, qy) < opts.escape_radius:
                    lo = mid
                else:
                    hi = mid
            qx, qy = _hermite(p_old, f_old, p_new, f_new, h, hi)
            t_exit = t + hi * h
            samples.append((t_exit, qx, qy))
            return Orbit(samples, Termination(kind="escaped",
                                              exit_radius=math.hypot(qx, qy),
                                              exit_angle=math.atan2(qy, qx) % TWO_PI),
                         h_drift=drift, windings=theta / TWO_PI, loops=loops)

        # capture by an equilibrium ball, tested along the whole step segment
        step_len = abs(xn - x) + abs(yn - y)
        for i, cb in enumerate(opts.capture):
            reach = step_len + 2.0 * cb.radius
            if abs(xn - cb.x) > reach or abs(yn - cb.y) > reach:
                if not armed[i]:
                    armed[i] = True
                continue
            tau, d = _segment_closest(x, y, xn, yn, cb.x, cb.y)
            if not armed[i]:
                if d > cb.radius * 2.0:
                    armed[i] = True
                continue
            if d <= cb.radius:
                qx, qy = x + tau * (xn - x), y + tau * (yn - y)
                samples.append((t + tau * h, qx, qy))
                return Orbit(samples, Termination(kind="converged", equilibrium_id=cb.target_id),
                             h_drift=drift, windings=theta / TWO_PI, loops=loops)

        # closure: transversal-section return near the start point
        if opts.detect_closure:
            g_new = (xn - start.x) * tx + (yn - start.y) * ty
            if not section_armed:
                if math.hypot(xn - start.x, yn - start.y) > 100.0 * ctol:
                    section_armed = True
            elif g_prev < 0.0 <= g_new:
                lo, hi = 0.0, 1.0
                for _ in range(60):
                    mid = 0.5 * (lo + hi)
                    qx, qy = _hermite(p_old, f_old, p_new, f_new, h, mid)
                    if (qx - start.x) * tx + (qy - start.y) * ty < 0.0:
                        lo = mid
                    else:
                        hi = mid
                qx, qy = _hermite(p_old, f_old, p_new, f_new, h, 0.5 * (lo + hi))
                if math.hypot(qx - start.x, qy - start.y) <= ctol:
                    loops += 1
                    t_cross = t + 0.5 * (lo + hi) * h
                    if t_first_return is None:
                        t_first_return = t_cross
                    if loops >= opts.min_loops:
                        samples.append((t_cross, qx, qy))
                        return Orbit(samples,
                                     Termination(kind="closed", period=t_first_return),
                                     h_drift=drift, windings=theta / TWO_PI, loops=loops)
            g_prev = g_new
        t, x, y = t_new, xn, yn
        fx, fy = k7x, k7y
        rec += 1
        if rec % opts.record_every == 0:
            samples.append((t, x, y))
        if ham:
            hh = hamiltonian(p, PolarPoint(r_new, math.atan2(yn, xn)))
            d = abs(hh - h0)
            if d > drift:
                drift = d
        # stationary field: orbit converged without a capture ball
        speed = math.hypot(fx, fy)
        if speed <= opts.atol * 10 * (1.0 + r_new):
            eq_id = _nearest_capture_id(x, y, opts.capture)
            if eq_id is None and r_new < 1e-9:
                eq_id = "O"
            return Orbit(samples, Termination(kind="converged", equilibrium_id=eq_id),
                         h_drift=drift, windings=theta / TWO_PI, loops=loops)
        h *= min(5.0, max(0.2, 0.9 * err ** -0.2 if err > 0 else 5.0))
    if samples[-1][0] != t:
        samples.append((t, x, y))
    return Orbit(samples, Termination(kind="max_time"), h_drift=drift,
                 windings=theta / TWO_PI, loops=loops)


def _nearest_capture_id(x: float, y: float, balls) -> str | None:
    best, best_d = None, math.inf
    for cb in balls:
        d = math.hypot(x - cb.x, y - cb.y)
        if d < best_d:
            best, best_d = cb.target_id, d
    return best


@dataclass(frozen=True)
class BranchConnection:
    kind: str                 # loops-to-saddle | escapes | converges | undecided
    target_id: str | None = None


@dataclass
class SeparatrixBranch:
    manifold: str             # unstable | stable
    orientation: int          # +1 / -1 along the eigenvector
    orbit: Orbit
    connection: BranchConnection


@dataclass
class SeparatrixSet:
    saddle_id: str
    branches: list[SeparatrixBranch]


def saddle_frame(p: ModelParams, saddle: Equilibrium) -> tuple[CartPoint, tuple, tuple, float, float]:
    """Cartesian location and eigen-frame of a saddle."""
    pt = PolarPoint(saddle.r, saddle.phi).to_cartesian()
    (a, b), (c, d) = cartesian_jacobian(p, pt)
    tr, det = a + d, a * d - b * c
    disc = tr * tr / 4.0 - det
    if disc <= 0:
        raise ValueError("saddle_frame called on a non-saddle (no real eigenvalues)")
    sq = math.sqrt(disc)
    lam_u, lam_s = tr / 2.0 + sq, tr / 2.0 - sq
    vecs = []
    for lam in (lam_u, lam_s):
        if abs(b) >= abs(c):
            v = (b, lam - a)
        else:
            v = (lam - d, c)
        nrm = math.hypot(*v)
        if nrm == 0.0:
            v, nrm = (1.0, 0.0), 1.0
        vecs.append((v[0] / nrm, v[1] / nrm))
    return pt, vecs[0], vecs[1], lam_u, lam_s


def trace_separatrices(
    p: ModelParams,
    saddle: Equilibrium,
    saddles: list[Equilibrium],
    sinks: list[Equilibrium] = (),
    opts: IntegrateOptions | None = None,
) -> SeparatrixSet:
    """Four separatrix branches of a saddle with connection verdicts.

    Branches start at offset delta = 1e-6*(1 + r) along the unstable
    (forward time) and stable (reversed time) eigenvectors.  Arrival within
    10*delta of any saddle is a loops-to-saddle connection; reaching a
    non-saddle equilibrium is converges; leaving the escape radius is
    escapes; anything else is undecided.
    """
    pt, v_u, v_s, lam_u, lam_s = saddle_frame(p, saddle)
    delta = 1e-6 * (1.0 + saddle.r)
    balls = [
        CaptureBall(
            x=PolarPoint(s.r, s.phi).to_cartesian().x,
            y=PolarPoint(s.r, s.phi).to_cartesian().y,
            radius=10 * 1e-6 * (1.0 + s.r),
            target_id=s.eq_id,
            is_saddle=True,
        )
        for s in saddles
    ]
    for s in sinks:
        c = PolarPoint(s.r, s.phi).to_cartesian()
        balls.append(CaptureBall(x=c.x, y=c.y, radius=0.02 * (1.0 + s.r),
                                 target_id=s.eq_id, is_saddle=False))
    lam_min = min(abs(lam_u), abs(lam_s))
    base = opts or IntegrateOptions()
    run_opts = IntegrateOptions(
        max_time=max(base.max_time, 60.0 / max(lam_min, 1e-3)),
        escape_radius=base.escape_radius,
        detect_closure=False,
        rtol=base.rtol, atol=base.atol,
        max_steps=base.max_steps,
        capture=tuple(balls),
    )
    saddle_ids = {s.eq_id for s in saddles}
    branches = []
    for manifold, vec, direction in (("unstable", v_u, 1), ("stable", v_s, -1)):
        for orientation in (1, -1):
            sx = pt.x + orientation * delta * vec[0]
            sy = pt.y + orientation * delta * vec[1]
            orbit = integrate_orbit(p, CartPoint(sx, sy), run_opts, direction=direction)
            term = orbit.termination
            if term.kind == "converged" and term.equilibrium_id in saddle_ids:
                conn = BranchConnection("loops-to-saddle", term.equilibrium_id)
            elif term.kind == "converged":
                conn = BranchConnection("converges", term.equilibrium_id)
            elif term.kind == "escaped":
                conn = BranchConnection("escapes")
            else:
                conn = BranchConnection("undecided")
            branches.append(SeparatrixBranch(manifold, orientation, orbit, conn))
    return SeparatrixSet(saddle_id=saddle.eq_id, branches=branches)


@dataclass
class CensusResult:
    r0: float
    count: int
    forward: dict[str, int]
    backward: dict[str, int]
    seeds: list[dict]            # per-seed: angle, forward/backward bins


def destination_census(
    p: ModelParams,
    circle: tuple[float, int],
    equilibria: list[Equilibrium],
    opts: IntegrateOptions | None = None,
    directions: tuple[int, ...] = (1, -1),
) -> CensusResult:
    """Terminal-behavior histogram for seeds equally spaced on a circle.

    Each seed is integrated forward and backward (both recorded since the
    interesting attractors may live in either time direction); verdicts are
    binned by equilibrium id, 'closed', 'escaped' or 'max_time'.
    """
    r0, count = circle
    base = opts or IntegrateOptions(max_time=2000.0, detect_closure=True)
    balls = []
    for e in equilibria:
        c = PolarPoint(e.r, e.phi).to_cartesian()
        rad = 10 * 1e-6 * (1.0 + e.r) if e.is_saddle else 0.03 * (1.0 + e.r)
        balls.append(CaptureBall(x=c.x, y=c.y, radius=rad, target_id=e.eq_id,
                                 is_saddle=e.is_saddle))
    run_opts = IntegrateOptions(
        max_time=base.max_time, escape_radius=base.escape_radius,
        closure_tol=base.closure_tol, detect_closure=base.detect_closure,
        rtol=max(base.rtol, 1e-9), atol=max(base.atol, 1e-11),
        max_steps=base.max_steps, capture=tuple(balls), record_every=10**9,
    )
    fwd: dict[str, int] = {}
    bwd: dict[str, int] = {}
    seeds = []
    for i in range(count):
        ang = TWO_PI * i / count
        start = CartPoint(r0 * math.cos(ang), r0 * math.sin(ang))
        entry = {"angle": ang}
        for direction in directions:
            orbit = integrate_orbit(p, start, run_opts, direction=direction)
            term = orbit.termination
            label = term.equilibrium_id if term.kind == "converged" else term.kind
            label = label or "converged"
            hist = fwd if direction == 1 else bwd
            hist[label] = hist.get(label, 0) + 1
            entry["forward" if direction == 1 else "backward"] = label
        seeds.append(entry)
    return CensusResult(r0=r0, count=count, forward=fwd, backward=bwd, seeds=seeds)
