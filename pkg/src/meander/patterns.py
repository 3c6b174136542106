"""Portrait assembly and classification into ornamental patterns.

A portrait bundles everything the renderer and the reports need: origin
and peripheral equilibria with symmetry copies expanded, separatrix sets
for every saddle, representative sample orbits per annulus, node
directions at infinity, quasi-equilibrium and limit-cycle radii, and
degeneracy flags.  Classification maps the portrait onto the pattern
vocabulary: centroids, n-cycles (star or convex), flower rings and
spider-nets, with the count bounds (n-3)/2 (odd n) and (n-2)/2 (even n)
enforced structurally by saddle/center alternation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import CartPoint, ModelParams, PolarPoint, TWO_PI, is_hamiltonian, normalize_rotation
from .equilibria import (
    Equilibrium,
    IllConditionedRootsError,
    KIND_CENTER,
    KIND_SADDLE,
    KIND_STABLE_SPIRAL,
    KIND_UNSTABLE_SPIRAL,
    KIND_WEAK,
    angular_polynomial,
    origin_analysis,
    peripheral_equilibria,
    positive_roots,
    quasi_equilibria,
    radial_limit_cycles,
)
from .asymptotics import DegenerateEquatorError, EquatorNode, equator_equilibria
from .integrator import (
    CaptureBall,
    CensusResult,
    IntegrateOptions,
    Orbit,
    SeparatrixSet,
    SeparatrixBranch,
    BranchConnection,
    destination_census,
    integrate_orbit,
    trace_separatrices,
)

CENTROID_KINDS = {KIND_CENTER, KIND_STABLE_SPIRAL, KIND_UNSTABLE_SPIRAL}

REGIME_NONE = "no-analytic-regime-map"


class DegeneratePortraitError(ValueError):
    """Pattern classification refused at a bifurcation boundary."""


@dataclass
class PortraitOptions:
    seed_count: int = 3             # sample orbits per annular region
    orbit_max_time: float = 400.0
    min_loops: int = 1
    sample_orbits: bool = True
    trace_saddles: bool = True
    escape_factor: float = 50.0
    census: tuple[float, int] | None = None
    census_max_time: float = 4000.0
    rtol: float = 1e-10
    atol: float = 1e-12


@dataclass
class Portrait:
    params: ModelParams             # rotation-normalized
    beta: float
    origin: Equilibrium
    peripheral: list[Equilibrium]
    separatrices: list[SeparatrixSet]
    orbits: list[Orbit]
    equator_nodes: list[EquatorNode]
    quasi_radii: list[float]
    limit_cycles: list[tuple[float, str, bool]]   # (radius, stability, approximate)
    degenerate: list[str]
    hamiltonian: bool
    census: CensusResult | None = None

    @property
    def equilibria(self) -> list[Equilibrium]:
        return [self.origin] + self.peripheral

    @property
    def saddles(self) -> list[Equilibrium]:
        return [e for e in self.peripheral if e.is_saddle]

    @property
    def radius_classes(self) -> list[tuple[float, str]]:
        """Sorted (radius, kind) over peripheral radius ranks."""
        seen: dict[int, tuple[float, str]] = {}
        for e in self.peripheral:
            seen.setdefault(e.radius_rank, (e.r, e.kind))
        return [seen[k] for k in sorted(seen)]

    @property
    def outermost_radius(self) -> float:
        radii = [e.r for e in self.peripheral] + list(self.quasi_radii)
        radii += [r for r, _, _ in self.limit_cycles]
        return max(radii) if radii else 0.0


@dataclass
class PatternReport:
    centroids: dict
    flower_rings: dict
    n_cycles: list[dict]
    spider_net: dict
    indeterminacy: dict | None
    regime_label: str | None
    unresolved: list[str]


def _rotate_orbit(orbit: Orbit, angle: float) -> Orbit:
    c, s = math.cos(angle), math.sin(angle)
    samples = [(t, c * x - s * y, s * x + c * y) for t, x, y in orbit.samples]
    return Orbit(samples=samples, termination=orbit.termination,
                 h_drift=orbit.h_drift, windings=orbit.windings, loops=orbit.loops)


def _rotate_connection(conn: BranchConnection, j: int, n: int) -> BranchConnection:
    if conn.target_id and conn.target_id.startswith("E"):
        rank_s, copy_s = conn.target_id[1:].split("j")
        return BranchConnection(conn.kind, f"E{rank_s}j{(int(copy_s) + j) % n}")
    return conn


def build_portrait(p: ModelParams, opts: PortraitOptions | None = None) -> Portrait:
    """Assemble the full portrait; deterministic for fixed params and options.

    Pipeline: rotation normalization, origin analysis, peripheral
    equilibrium construction and classification, separatrix tracing for the
    representative saddle of each radius class (symmetry copies are exact
    rotations), annulus-seeded sample orbits on the phi = 0 ray, and the
    equator analysis.  Bifurcation boundaries set degeneracy flags instead
    of failing.
    """
    opts = opts or PortraitOptions()
    pn, beta = normalize_rotation(p)
    degenerate: list[str] = []
    ham = is_hamiltonian(pn)

    origin = origin_analysis(pn)
    if origin.kind == KIND_WEAK:
        degenerate.append("origin linearization vanishes (eps1 = eps2 = 0, a1 = 0)")

    peripheral: list[Equilibrium] = []
    try:
        peripheral = peripheral_equilibria(pn)
    except IllConditionedRootsError as exc:
        degenerate.append(f"root isolation at a bifurcation boundary: {exc}")
    if any(e.root_multiplicity >= 2 for e in peripheral):
        degenerate.append("tangent (multiple) equilibrium radius: saddle-center collision")
    if any(e.kind == KIND_WEAK for e in peripheral):
        degenerate.append("weak classification verdict at current tolerance")
    if ham and pn.b1 == 0.0:
        q1 = angular_polynomial(pn)
        if q1.degree > 0 and positive_roots(q1):
            degenerate.append("b = 0 Hamiltonian field: circles of non-isolated equilibria")

    quasi = quasi_equilibria(pn)
    cycles = [(r, st, pn.b1 != 0.0) for r, st in radial_limit_cycles(pn)] if not ham else []

    nodes: list[EquatorNode] = []
    try:
        nodes = equator_equilibria(pn)
    except DegenerateEquatorError as exc:
        degenerate.append(str(exc))

    r_out = max([e.r for e in peripheral] + list(quasi) + [r for r, _, _ in cycles], default=0.0)
    escape_radius = opts.escape_factor * r_out if r_out > 0 else 1e3

    separatrices: list[SeparatrixSet] = []
    if opts.trace_saddles and peripheral:
        saddles = [e for e in peripheral if e.is_saddle]
        sinks = [e for e in peripheral if e.kind in (KIND_STABLE_SPIRAL, KIND_UNSTABLE_SPIRAL)]
        reps = [e for e in saddles if e.copy_index == 0]
        run_opts = IntegrateOptions(escape_radius=escape_radius, rtol=opts.rtol, atol=opts.atol)
        for rep in reps:
            base = trace_separatrices(pn, rep, saddles, sinks, run_opts)
            separatrices.append(base)
            for j in range(1, pn.n):
                angle = TWO_PI * j / pn.n
                branches = [
                    SeparatrixBranch(
                        manifold=br.manifold, orientation=br.orientation,
                        orbit=_rotate_orbit(br.orbit, angle),
                        connection=_rotate_connection(br.connection, j, pn.n),
                    )
                    for br in base.branches
                ]
                rank = rep.radius_rank
                separatrices.append(SeparatrixSet(saddle_id=f"E{rank}j{j}", branches=branches))

    orbits: list[Orbit] = []
    if opts.sample_orbits:
        critical = sorted({round(r, 12) for r in
                           [e.r for e in peripheral] + list(quasi) + [r for r, _, _ in cycles]})
        balls = []
        for e in [origin] + peripheral:
            c = PolarPoint(e.r, e.phi).to_cartesian()
            rad = 10e-6 * (1.0 + e.r) if e.is_saddle else 0.02 * (1.0 + e.r)
            balls.append(CaptureBall(c.x, c.y, rad, e.eq_id, e.is_saddle))
        edges = [0.0] + critical + [critical[-1] * 1.5 if critical else 1.0]
        seeds = []
        for lo, hi in zip(edges, edges[1:]):
            if hi - lo < 1e-9:
                continue
            for i in range(opts.seed_count):
                frac = (i + 1) / (opts.seed_count + 1)
                seeds.append(lo + frac * (hi - lo))
        run = IntegrateOptions(
            max_time=opts.orbit_max_time, escape_radius=escape_radius,
            min_loops=opts.min_loops, rtol=opts.rtol, atol=opts.atol,
            capture=tuple(balls),
        )
        for r_seed in seeds:
            if r_seed <= 0:
                continue
            orbits.append(integrate_orbit(pn, CartPoint(r_seed, 0.0), run))

    census = None
    if opts.census is not None:
        census = destination_census(
            pn, opts.census, [origin] + peripheral,
            IntegrateOptions(max_time=opts.census_max_time, escape_radius=escape_radius,
                             detect_closure=True),
        )

    return Portrait(
        params=pn, beta=beta, origin=origin, peripheral=peripheral,
        separatrices=separatrices, orbits=orbits, equator_nodes=nodes,
        quasi_radii=quasi, limit_cycles=cycles, degenerate=degenerate,
        hamiltonian=ham, census=census,
    )


def _cycle_polyline(pt: Portrait, rank: int) -> list[tuple[float, float]] | None:
    """Closed separatrix chain through the rank's n saddles, smallest one.

    Collects the unstable branches of every copy that loop to a *different*
    saddle copy of the same rank, picks the chain with the smaller mean
    radius when two distinct chains exist, and orders the union of samples
    by angle (the cycles of interest encircle the origin).
    """
    n = pt.params.n
    chains: dict[int, list[list[tuple[float, float]]]] = {}
    for sset in pt.separatrices:
        rk, _ = sset.saddle_id[1:].split("j")
        if int(rk) != rank:
            continue
        for br in sset.branches:
            if br.manifold != "unstable" or br.connection.kind != "loops-to-saddle":
                continue
            t_rk, t_j = br.connection.target_id[1:].split("j")
            if int(t_rk) != rank:
                continue
            own_j = int(sset.saddle_id.split("j")[1])
            hop = (int(t_j) - own_j) % n
            if hop == 0:
                continue  # homoclinic petal, a leaf boundary rather than a cycle
            chains.setdefault(br.orientation, []).append(br.orbit.points)
    if not chains:
        return None
    best = None
    best_mean = math.inf
    for orientation, parts in chains.items():
        pts = [q for part in parts for q in part]
        mean_r = sum(math.hypot(x, y) for x, y in pts) / max(len(pts), 1)
        if mean_r < best_mean:
            best_mean, best = mean_r, pts
    best.sort(key=lambda q: math.atan2(q[1], q[0]))
    return best


def _resample_by_angle(points: list[tuple[float, float]], m: int) -> list[tuple[float, float]]:
    """Uniform angular resampling of an origin-encircling closed polyline.

    Interpolates r(phi) linearly; even coverage matters because integrator
    samples cluster near the slow saddle corners and would otherwise starve
    the arcs between them.
    """
    ang = [math.atan2(y, x) for x, y in points]
    rad = [math.hypot(x, y) for x, y in points]
    order = sorted(range(len(points)), key=lambda i: ang[i])
    ang = [ang[i] for i in order]
    rad = [rad[i] for i in order]
    ang.append(ang[0] + TWO_PI)
    rad.append(rad[0])
    out = []
    j = 0
    for k in range(m):
        a = ang[0] + TWO_PI * k / m
        while j + 1 < len(ang) and ang[j + 1] < a:
            j += 1
        a0, a1 = ang[j], ang[j + 1]
        w = 0.0 if a1 == a0 else (a - a0) / (a1 - a0)
        r = rad[j] * (1 - w) + rad[j + 1] * w
        out.append((r * math.cos(a), r * math.sin(a)))
    return out


def _is_convex(points: list[tuple[float, float]], samples: int) -> bool:
    """Cross-product convexity test after uniform angular resampling."""
    if len(points) < 3:
        return True
    ring = _resample_by_angle(points, samples)
    m = len(ring)
    scale = max(max(abs(x), abs(y)) for x, y in ring)
    tol = 1e-9 * scale * scale
    pos = neg = 0
    for i in range(m):
        ax, ay = ring[i]
        bx, by = ring[(i + 1) % m]
        cx, cy = ring[(i + 2) % m]
        cr = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if cr > tol:
            pos += 1
        elif cr < -tol:
            neg += 1
    return pos == 0 or neg == 0


def classify_patterns(pt: Portrait) -> PatternReport:
    """Read the pattern vocabulary off an assembled portrait.

    Centroid: center/spiral equilibrium with its surrounding orbits.
    n-cycle: saddle radius whose unstable separatrices chain through the
    symmetry copies; star when the chain polyline is non-convex.  Flower
    ring: center/spiral radius whose leaf boundary is confirmed by
    loops-to-saddle connections at an adjacent saddle radius.  Spider-net:
    node directions at infinity plus at least one escaping saddle branch.
    Undecided connections degrade the affected pattern to unresolved.
    """
    if pt.degenerate:
        raise DegeneratePortraitError("; ".join(pt.degenerate))
    unresolved: list[str] = []
    classes = pt.radius_classes
    n = pt.params.n

    centroid_radii = [0.0] if pt.origin.kind in CENTROID_KINDS else []
    centroid_count = len(centroid_radii)
    for r, kind in classes:
        if kind in CENTROID_KINDS:
            centroid_radii.append(r)
            centroid_count += n

    loops_by_rank: dict[int, bool] = {}
    undecided_by_rank: dict[int, bool] = {}
    for sset in pt.separatrices:
        rank = int(sset.saddle_id[1:].split("j")[0])
        for br in sset.branches:
            if br.connection.kind == "loops-to-saddle":
                loops_by_rank[rank] = True
            elif br.connection.kind == "undecided":
                undecided_by_rank[rank] = True

    ring_radii = []
    have_traces = bool(pt.separatrices)
    for rank, (r, kind) in enumerate(classes):
        if kind not in CENTROID_KINDS:
            continue
        if not have_traces:
            ring_radii.append(r)  # theory count: alternation guarantees the leaf
            continue
        neighbor_ranks = [rk for rk in (rank - 1, rank + 1)
                          if 0 <= rk < len(classes) and classes[rk][1] == KIND_SADDLE]
        if any(loops_by_rank.get(rk) for rk in neighbor_ranks):
            ring_radii.append(r)
        elif any(undecided_by_rank.get(rk) for rk in neighbor_ranks):
            unresolved.append(f"flower ring at r={r:.6g}: leaf boundary undecided")
        else:
            unresolved.append(f"flower ring at r={r:.6g}: no bounding separatrix loop found")

    cycles = []
    for rank, (r, kind) in enumerate(classes):
        if kind != KIND_SADDLE:
            continue
        if undecided_by_rank.get(rank) and not loops_by_rank.get(rank):
            unresolved.append(f"n-cycle at r={r:.6g}: separatrix connections undecided")
            continue
        poly = _cycle_polyline(pt, rank)
        if poly:
            shape = "convex" if _is_convex(poly, 32 * n) else "star"
            cycles.append({"radius": r, "shape": shape})

    escaping = any(
        br.connection.kind == "escapes"
        for sset in pt.separatrices for br in sset.branches
    )
    spider = {
        "present": bool(pt.equator_nodes) and escaping,
        "sectors": n if (pt.equator_nodes and escaping) else 0,
    }

    indeterminacy = None
    if pt.census is not None:
        c = pt.census
        indeterminacy = {
            "r0": c.r0, "count": c.count,
            "forward": dict(sorted(c.forward.items())),
            "backward": dict(sorted(c.backward.items())),
            "distinct_forward": len([k for k in c.forward if k.startswith("E")]),
            "distinct_backward": len([k for k in c.backward if k.startswith("E")]),
            "seeds": c.seeds,
        }

    label = regime(pt.params)
    return PatternReport(
        centroids={"count": centroid_count, "radii": centroid_radii},
        flower_rings={"count": len(ring_radii), "radii": ring_radii},
        n_cycles=cycles,
        spider_net=spider,
        indeterminacy=indeterminacy,
        regime_label=None if label == REGIME_NONE else label,
        unresolved=unresolved,
    )


def boundary_c_threshold(eps2: float, b: float) -> float:
    """Ring-birth coefficient for n = 5: the a2_1 solving 27*eps2*b^2 + 4*a^3 = 0."""
    v = -27.0 * eps2 * b * b / 4.0
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def regime(p: ModelParams) -> str:
    """Analytic regime label where one exists (Hamiltonian n = 4 or 5).

    n = 5: side of the cubic boundary 27*eps2*b^2 + 4*a2_1^3 = 0.
    n = 4: sign pattern of (a2_1 - b, a2_1 + b), the two straight boundaries
    b = +-a2_1.  Everything else gets the explicit no-map verdict.
    """
    pn, _ = normalize_rotation(p)
    if pn.n not in (4, 5) or not is_hamiltonian(pn):
        return REGIME_NONE
    b = pn.b1
    a = pn.a2[0]
    if pn.n == 5:
        c = 27.0 * pn.eps2 * b * b + 4.0 * a ** 3
        tol = 1e-12 * max(1.0, abs(27.0 * pn.eps2 * b * b), abs(4.0 * a ** 3))
        if abs(c) <= tol:
            return "on-boundary-C"
        return "domain-1" if c > 0 else "domain-2"
    tol = 1e-12 * max(1.0, abs(a), b)
    lo, hi = a - b, a + b
    if abs(lo) <= tol or abs(hi) <= tol:
        return "on-boundary"
    if lo > 0 and hi > 0:
        return "domain-1"
    if lo < 0 < hi:
        return "domain-2"
    return "domain-3"
