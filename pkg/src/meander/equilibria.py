"""Finite equilibria: radial polynomials, positive roots, classification.

Peripheral equilibria of the normalized field satisfy

    r*(eps1 + P1s(r^2)) + b*r^(n-1)*cos(n*phi) = 0,
    eps2 + Q1s(r^2) - b*r^(n-2)*sin(n*phi) = 0.

In the Hamiltonian case the first equation forces cos(n*phi) = 0, the 2n
rays phi = +-pi/(2n) + 2*pi*j/n, and radii come from the ring polynomials
P+- = P0 -+ b*r^(n-2).  In the general case radii solve
P1(r)^2 + Q1(r)^2 = b^2 r^(2(n-2)) and the angle follows from atan2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import ModelParams, NotNormalizedError, PolarPoint, TWO_PI, eval_polar, is_hamiltonian

ROOT_TOL = 1e-10          # positivity cutoff / cluster resolution for radii
CLASSIFY_TOL = 1e-8       # trace/det threshold below which a verdict is "weak"

KIND_SADDLE = "saddle"
KIND_CENTER = "center"
KIND_STABLE_SPIRAL = "stable-spiral"
KIND_UNSTABLE_SPIRAL = "unstable-spiral"
KIND_STABLE_NODE = "stable-node"
KIND_UNSTABLE_NODE = "unstable-node"
KIND_WEAK = "weak"


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no isolated roots to count."""


class IllConditionedRootsError(RuntimeError):
    """Roots cluster tighter than the requested tolerance; not silently merged."""


@dataclass(frozen=True)
class RadialPolynomial:
    """Real polynomial in r, coefficients by ascending power."""

    coefficients: tuple[float, ...]
    tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i] != 0.0:
                return i
        return -1

    def __call__(self, r):
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * r + c
        return acc

    def derivative(self) -> "RadialPolynomial":
        d = tuple(k * c for k, c in enumerate(self.coefficients))[1:]
        return RadialPolynomial(d if d else (0.0,), tag=self.tag + "'")


def descartes_bound(q: RadialPolynomial) -> int:
    """Sign changes in the nonzero-coefficient sequence by ascending power.

    Upper bound on the number of positive roots (equality or less by an
    even number).
    """
    signs = [math.copysign(1.0, c) for c in q.coefficients if c != 0.0]
    if not signs:
        raise ZeroPolynomialError("descartes_bound of the zero polynomial")
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(coeffs: tuple[float, ...]) -> float:
    """1 + max |c_i / c_deg|: every real root lies within this radius."""
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0.0:
        deg -= 1
    lead = abs(coeffs[deg])
    if lead == 0.0:
        return 1.0
    return 1.0 + max(abs(c) for c in coeffs[:deg]) / lead if deg > 0 else 1.0


def _poly_scale(coeffs: np.ndarray, r: float) -> float:
    """sum |c_i| r^i, the natural magnitude of evaluation noise at r."""
    return float(np.abs(coeffs) @ np.power(r, np.arange(len(coeffs))))


_UNIT_GRIDS: dict[int, np.ndarray] = {}


def _unit_grid(npts: int) -> np.ndarray:
    grid = _UNIT_GRIDS.get(npts)
    if grid is None:
        grid = np.linspace(0.0, 1.0, npts)
        _UNIT_GRIDS[npts] = grid
    return grid


def _refine_root(q: RadialPolynomial, lo: float, hi: float) -> float:
    """Newton polishing inside a sign-change bracket, bisection fallback."""
    dq = q.derivative()
    flo = q(lo)
    x = 0.5 * (lo + hi)
    for _ in range(80):
        fx = q(x)
        if fx == 0.0:
            return x
        if (fx < 0) == (flo < 0):
            lo = x
        else:
            hi = x
        d = dq(x)
        x_new = x - fx / d if d != 0.0 else 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 1e-15 * max(1.0, abs(x)):
            return x_new
        x = x_new
    return x


def _root_multiplicity(q: RadialPolynomial, r: float) -> int:
    """Count leading derivatives vanishing at r, relative to coefficient scale."""
    mult = 0
    cur = q
    for _ in range(len(q.coefficients)):
        scale = _poly_scale(np.asarray(cur.coefficients), max(abs(r), 1e-300))
        if scale == 0.0 or abs(cur(r)) > 1e-7 * scale:
            break
        mult += 1
        cur = cur.derivative()
    return max(mult, 1)


def positive_roots(
    q: RadialPolynomial, tol: float = ROOT_TOL
) -> list[tuple[float, int]]:
    """All real roots r > tol, ascending, as (root, multiplicity) pairs.

    Grid sign-change scan with Newton polishing; tangency (even-multiplicity)
    roots are picked up from near-zero grid minima.  Raises
    IllConditionedRootsError when distinct resolvable roots sit closer than
    tol or when refinement cannot reconcile the count with the endpoint-sign
    parity.  Pairs separated below double-precision evaluation resolution
    are indistinguishable from tangencies and come back as one root of
    multiplicity 2, keeping the total count correct.
    """
    if tol <= 0:
        raise ValueError("tol must be > 0")
    if q.degree < 0:
        raise ZeroPolynomialError("positive_roots of the zero polynomial")
    coeffs = np.asarray(q.coefficients[: q.degree + 1])
    # deflate low-order zero coefficients: drops only the root at r = 0,
    # which the positivity cutoff excludes anyway
    nz = np.nonzero(coeffs)[0]
    if nz[0] > 0:
        coeffs = coeffs[nz[0]:]
        q = RadialPolynomial(tuple(coeffs), tag=q.tag)
    if q.degree == 0:
        return []
    bound = _cauchy_bound(tuple(coeffs)) * 1.0000001
    # no root lies below |c0| / (|c0| + max |c_i|)
    lower = abs(coeffs[0]) / (abs(coeffs[0]) + max(abs(c) for c in coeffs[1:]))
    lo_geo = min(max(tol, 0.5 * lower), 0.5 * bound)
    npts = max(256, 64 * q.degree)
    for attempt in range(4):
        # union of uniform and log-spaced grids: a small leading coefficient
        # inflates the root bound far beyond the scale of the inner roots,
        # and a uniform grid alone would step over them
        u = _unit_grid(npts)
        grid = np.sort(np.concatenate([
            tol + (bound - tol) * u,
            lo_geo * np.exp(math.log(bound / lo_geo) * u),
        ]))
        vals = np.polynomial.polynomial.polyval(grid, coeffs)
        signs = np.sign(vals)
        # sign-change brackets (treat exact zeros as part of the left cell)
        idx = np.nonzero((signs[:-1] * signs[1:]) < 0)[0]
        roots = [_refine_root(q, grid[i], grid[i + 1]) for i in idx]
        roots.extend(grid[i] for i in np.nonzero(signs == 0)[0])
        # tangency candidates: interior local minima of |q| that dip to ~0
        # without a sign change; a local quadratic model separates true
        # double roots from sub-tolerance clusters and near-misses
        absv = np.abs(vals)
        scales = np.polynomial.polynomial.polyval(grid, np.abs(coeffs))
        interior = np.arange(1, len(grid) - 1)
        mins = interior[(absv[interior] < absv[interior - 1])
                        & (absv[interior] <= absv[interior + 1])
                        & (absv[interior] <= 1e-3 * np.maximum(scales[interior], 1e-300))]
        dq = q.derivative()
        ddq = dq.derivative()
        for i in mins:
            r0 = grid[i]
            local = grid[i + 1] - grid[i - 1]
            if any(abs(r0 - r) < 2 * local for r in roots):
                continue
            # polish the extremum on q'
            r_c = r0
            for _ in range(60):
                d2 = ddq(r_c)
                d1 = dq(r_c)
                if d2 == 0.0:
                    break
                step = d1 / d2
                r_c -= step
                if abs(step) < 1e-15 * max(1.0, abs(r_c)):
                    break
            if r_c <= tol or any(abs(r_c - r) < 2 * local for r in roots):
                continue
            scale_c = max(_poly_scale(coeffs, r_c), 1e-300)
            q_c = q(r_c)
            dd = ddq(r_c)
            if abs(q_c) <= 1e-12 * scale_c:
                roots.append(r_c)  # certified tangency, multiplicity counted below
            elif q_c * dd < 0.0:
                # dip crossing zero that the grid stepped over: two real roots
                half = math.sqrt(-2.0 * q_c / dd)
                if 2.0 * half <= tol * max(1.0, abs(r_c)):
                    raise IllConditionedRootsError(
                        f"{q.tag or 'polynomial'}: root pair at {r_c!r} separated by "
                        f"{2 * half:.3e}, below tol={tol}"
                    )
                roots.append(_refine_root(q, r_c, r_c + 2 * half))
                if r_c - 2 * half > tol:
                    roots.append(_refine_root(q, r_c - 2 * half, r_c))
        roots = sorted(r for r in roots if r > tol)
        merged: list[float] = []
        for r in roots:
            if merged and abs(r - merged[-1]) <= 1e-9 * max(1.0, abs(r)):
                continue  # same root found twice by adjacent brackets
            merged.append(r)
        for a, b in zip(merged, merged[1:]):
            if b - a < tol * max(1.0, abs(b)):
                raise IllConditionedRootsError(
                    f"{q.tag or 'polynomial'}: roots {a!r} and {b!r} closer than tol={tol}"
                )
        out = [(float(r), _root_multiplicity(q, float(r))) for r in merged]
        total = sum(m for _, m in out)
        # parity check against endpoint signs: a mismatch means a root pair
        # slipped through the grid; rescan finer
        p_lo, p_hi = q(tol), q(bound)
        endpoint_parity = 0 if (p_lo > 0) == (p_hi > 0) else 1
        if p_lo != 0.0 and p_hi != 0.0 and total % 2 != endpoint_parity:
            npts *= 8
            continue
        bnd = descartes_bound(q)
        simple_count = len(out)
        if simple_count > bnd:
            npts *= 8
            continue
        return out
    raise IllConditionedRootsError(
        f"{q.tag or 'polynomial'}: root isolation did not stabilize (cluster below grid resolution)"
    )


def build_radial_polynomials(p: ModelParams) -> dict[str, RadialPolynomial]:
    """Ring polynomials {P0, Pplus, Pminus} of the Hamiltonian field.

    P0 = eps2 + sum a2_k r^(2k); Pplus/Pminus = P0 -+ b*r^(n-2).  For even n
    the r^(n-2) coefficient of P0 already carries the full a2_s, so the
    resonant term simply shifts it by -+b.
    """
    if not p.is_normalized:
        raise NotNormalizedError("build_radial_polynomials needs normalized params")
    if not is_hamiltonian(p):
        raise ValueError("ring polynomials only describe the Hamiltonian case; "
                         "use general_radius_polynomial instead")
    deg = p.n - 2
    c0 = [0.0] * (deg + 1)
    c0[0] = p.eps2
    for k, a in enumerate(p.a2, start=1):
        c0[2 * k] += a
    cp = list(c0)
    cm = list(c0)
    cp[deg] -= p.b1
    cm[deg] += p.b1
    return {
        "P0": RadialPolynomial(tuple(c0), tag="P0"),
        "Pplus": RadialPolynomial(tuple(cp), tag="Pplus"),
        "Pminus": RadialPolynomial(tuple(cm), tag="Pminus"),
    }


def dissipative_polynomial(p: ModelParams) -> RadialPolynomial:
    """P1(r) = eps1 + sum a1_k r^(2k): the radial factor of the B=0 field."""
    c = [0.0] * (2 * len(p.a1) + 1)
    c[0] = p.eps1
    for k, a in enumerate(p.a1, start=1):
        c[2 * k] = a
    return RadialPolynomial(tuple(c), tag="P1")


def angular_polynomial(p: ModelParams) -> RadialPolynomial:
    """Q1(r) = eps2 + sum a2_k r^(2k): the angular velocity of the B=0 field."""
    c = [0.0] * (2 * len(p.a2) + 1)
    c[0] = p.eps2
    for k, a in enumerate(p.a2, start=1):
        c[2 * k] = a
    return RadialPolynomial(tuple(c), tag="Q1")


def general_radius_polynomial(p: ModelParams) -> RadialPolynomial:
    """G(r) = P1(r)^2 + Q1(r)^2 - b^2 r^(2(n-2)).

    Positive roots of G are the radii of peripheral equilibria in the
    general (non-Hamiltonian) case.  At a simple root the Jacobian
    determinant equals n*r/2 * G'(r), so descending crossings are saddles
    and ascending ones are centers/spirals.
    """
    p1 = np.asarray(dissipative_polynomial(p).coefficients)
    q1 = np.asarray(angular_polynomial(p).coefficients)
    g = np.polynomial.polynomial.polymul(p1, p1)
    g2 = np.polynomial.polynomial.polymul(q1, q1)
    size = max(len(g), len(g2), 2 * (p.n - 2) + 1)
    c = np.zeros(size)
    c[: len(g)] += g
    c[: len(g2)] += g2
    c[2 * (p.n - 2)] -= p.b1 * p.b1
    return RadialPolynomial(tuple(c), tag="F")


@dataclass(frozen=True)
class Equilibrium:
    """One equilibrium (representative or expanded symmetry copy)."""

    locus: str                      # origin | peripheral | quasi-equilibrium-cycle | radial-limit-cycle
    r: float
    phi: float
    ray: str                        # plus | minus | none
    kind: str
    multiplicity: int               # symmetry copies sharing this radius/kind
    jacobian: tuple[tuple[float, float], tuple[float, float]]
    trace: float
    det: float
    eigenvalues: tuple[complex, complex]
    eigenvectors: tuple[tuple[float, float], tuple[float, float]] | None = None
    root_multiplicity: int = 1
    copy_index: int = 0
    radius_rank: int = 0
    eq_id: str = "O"

    @property
    def is_saddle(self) -> bool:
        return self.kind == KIND_SADDLE


def _polar_jacobian(p: ModelParams, r: float, phi: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Jacobian of the (r, phi) system at an equilibrium point.

    Entries use the equilibrium identity r*P1 + b*r^(n-1)*cos(n*phi) = 0 to
    drop the vanishing combination from d(dr)/dr; valid when (r, phi)
    satisfies the equilibrium system.
    """
    n, b = p.n, p.b1
    r2 = r * r
    s1 = sum(2 * k * a * r2 ** k for k, a in enumerate(p.a1, start=1))
    s2 = sum(2 * k * a * r2 ** (k - 1) * r for k, a in enumerate(p.a2, start=1))
    cn, sn = math.cos(n * phi), math.sin(n * phi)
    p_r = s1 + (n - 2) * b * r ** (n - 2) * cn
    p_phi = -n * b * r ** (n - 1) * sn
    q_r = s2 - (n - 2) * b * r ** (n - 3) * sn
    q_phi = -n * b * r ** (n - 2) * cn
    return ((p_r, p_phi), (q_r, q_phi))


def _eig2(j: tuple[tuple[float, float], tuple[float, float]]):
    (a, b), (c, d) = j
    tr, det = a + d, a * d - b * c
    disc = tr * tr / 4.0 - det
    if disc >= 0.0:
        sq = math.sqrt(disc)
        lam = (complex(tr / 2.0 + sq), complex(tr / 2.0 - sq))
    else:
        sq = math.sqrt(-disc)
        lam = (complex(tr / 2.0, sq), complex(tr / 2.0, -sq))
    vecs = None
    if disc > 0.0:
        vv = []
        for l in (lam[0].real, lam[1].real):
            if abs(b) > abs(c):
                v = (b, l - a)
            elif c != 0.0 or l != d:
                v = (l - d, c)
            else:
                v = (1.0, 0.0)
            nrm = math.hypot(*v)
            vv.append((v[0] / nrm, v[1] / nrm) if nrm > 0 else (1.0, 0.0))
        vecs = (vv[0], vv[1])
    return tr, det, lam, vecs


def _kind_from(tr: float, det: float, j, tol: float) -> str:
    scale = max(1.0, abs(j[0][0]) + abs(j[0][1]) + abs(j[1][0]) + abs(j[1][1]))
    if det < -tol * scale:
        return KIND_SADDLE
    if det > tol * scale:
        if abs(tr) <= tol * scale:
            return KIND_CENTER
        return KIND_UNSTABLE_SPIRAL if tr > 0 else KIND_STABLE_SPIRAL
    return KIND_WEAK


def classify(p: ModelParams, e: Equilibrium, tol: float = CLASSIFY_TOL) -> str:
    """Stability class from the polar Jacobian at a peripheral equilibrium.

    det < -tol: saddle.  det > tol: center when |trace| <= tol, else spiral
    by sign(trace).  |det| <= tol: weak (left undecided at this tolerance).
    """
    j = _polar_jacobian(p, e.r, e.phi)
    tr, det, _, _ = _eig2(j)
    return _kind_from(tr, det, j, tol)


def _make_equilibrium(p: ModelParams, r: float, phi: float, ray: str,
                      root_mult: int, rank: int, j_copy: int) -> Equilibrium:
    jac = _polar_jacobian(p, r, phi)
    tr, det, lam, vecs = _eig2(jac)
    return Equilibrium(
        locus="peripheral", r=r, phi=phi % TWO_PI, ray=ray,
        kind=_kind_from(tr, det, jac, CLASSIFY_TOL),
        multiplicity=p.n, jacobian=jac, trace=tr, det=det, eigenvalues=lam,
        eigenvectors=vecs, root_multiplicity=root_mult, copy_index=j_copy,
        radius_rank=rank, eq_id=f"E{rank}j{j_copy}",
    )


def hamiltonian_radii(p: ModelParams, tol: float = ROOT_TOL) -> list[tuple[float, str, int]]:
    """Sorted (radius, ray, root_multiplicity) for the Hamiltonian case."""
    polys = build_radial_polynomials(p)
    if p.b1 == 0.0:
        # resonant term absent: ring polynomials coincide and their roots are
        # whole circles of equilibria, handled by the caller as degenerate
        return [(r, "none", m) for r, m in positive_roots(polys["P0"], tol)]
    out = [(r, "plus", m) for r, m in positive_roots(polys["Pplus"], tol)]
    out += [(r, "minus", m) for r, m in positive_roots(polys["Pminus"], tol)]
    return sorted(out)


def _newton_polish_2d(p: ModelParams, r: float, phi: float) -> tuple[float, float]:
    """Newton iterations on (P, Q)(r, phi) = 0 with the full derivative matrix."""
    n, b = p.n, p.b1
    for _ in range(50):
        pt = PolarPoint(r, phi)
        v = eval_polar(p, pt)
        f1, f2 = v.dr, v.dphi
        if abs(f1) + abs(f2) < 1e-14 * max(1.0, r):
            break
        r2 = r * r
        dp1 = sum((2 * k + 1) * a * r2 ** k for k, a in enumerate(p.a1, start=1)) + p.eps1
        dq1 = sum(2 * k * a * r2 ** (k - 1) * r for k, a in enumerate(p.a2, start=1))
        cn, sn = math.cos(n * phi), math.sin(n * phi)
        j11 = dp1 + (n - 1) * b * r ** (n - 2) * cn
        j12 = -n * b * r ** (n - 1) * sn
        j21 = dq1 - (n - 2) * b * r ** (n - 3) * sn
        j22 = -n * b * r ** (n - 2) * cn
        det = j11 * j22 - j12 * j21
        if det == 0.0:
            break
        dr = (f1 * j22 - f2 * j12) / det
        dphi = (f2 * j11 - f1 * j21) / det
        r, phi = r - dr, phi - dphi
        if abs(dr) + abs(dphi) < 1e-15 * max(1.0, r):
            break
    return r, phi


def peripheral_equilibria(p: ModelParams, tol: float = ROOT_TOL) -> list[Equilibrium]:
    """All nonzero finite equilibria, symmetry copies expanded, sorted by radius.

    Hamiltonian coefficients: ring-polynomial roots on the rays
    phi = +-pi/(2n) (mod 2*pi/n).  Otherwise: sign-change roots of
    G(r) = P1^2 + Q1^2 - b^2 r^(2(n-2)), angle recovered from atan2 and
    polished by 2-D Newton.
    """
    if not p.is_normalized:
        raise NotNormalizedError("peripheral_equilibria needs normalized params")
    out: list[Equilibrium] = []
    if is_hamiltonian(p):
        if p.b1 == 0.0:
            return []  # circles of equilibria, not isolated points (degenerate)
        radii = hamiltonian_radii(p, tol)
        for rank, (r, ray, mult) in enumerate(radii):
            phi0 = math.pi / (2 * p.n) if ray == "plus" else -math.pi / (2 * p.n)
            for j in range(p.n):
                out.append(_make_equilibrium(p, r, phi0 + TWO_PI * j / p.n, ray, mult, rank, j))
        return out
    if p.b1 == 0.0:
        return []  # B=0 general case has no isolated peripheral equilibria
    g = general_radius_polynomial(p)
    roots = positive_roots(g, tol)
    p1 = dissipative_polynomial(p)
    q1 = angular_polynomial(p)
    for rank, (r, mult) in enumerate(roots):
        nphi = math.atan2(q1(r), -p1(r))
        for j in range(p.n):
            phi = (nphi + TWO_PI * j) / p.n
            r_p, phi_p = _newton_polish_2d(p, r, phi)
            ray = "none"
            out.append(_make_equilibrium(p, r_p, phi_p, ray, mult, rank, j))
    return sorted(out, key=lambda e: (e.r, e.phi))


def origin_analysis(p: ModelParams) -> Equilibrium:
    """The equilibrium at z = 0: eigenvalues eps1 +- i*eps2.

    When eps1 = 0 the linearization is a center and the first nonzero
    dissipative coefficient (first/second Lyapunov value data a1_1, a1_2)
    decides weak stability; rotation direction near the origin follows
    sign(eps2).
    """
    jac = ((p.eps1, -p.eps2), (p.eps2, p.eps1))
    lam = (complex(p.eps1, p.eps2), complex(p.eps1, -p.eps2))
    if p.eps1 > 0:
        kind = KIND_UNSTABLE_SPIRAL if p.eps2 != 0 else KIND_UNSTABLE_NODE
    elif p.eps1 < 0:
        kind = KIND_STABLE_SPIRAL if p.eps2 != 0 else KIND_STABLE_NODE
    else:
        kind = KIND_CENTER
        for a in p.a1:
            if a != 0.0:
                kind = KIND_STABLE_SPIRAL if a < 0 else KIND_UNSTABLE_SPIRAL
                break
        if p.eps2 == 0.0 and kind == KIND_CENTER:
            kind = KIND_WEAK  # zero linearization, undecided here
    return Equilibrium(
        locus="origin", r=0.0, phi=0.0, ray="none", kind=kind, multiplicity=1,
        jacobian=jac, trace=2 * p.eps1, det=p.eps1 ** 2 + p.eps2 ** 2,
        eigenvalues=lam, eq_id="O",
    )


def rotation_direction(p: ModelParams) -> str:
    """Small-r orbit rotation: counterclockwise iff eps2 > 0."""
    if p.eps2 > 0:
        return "counterclockwise"
    if p.eps2 < 0:
        return "clockwise"
    return "undetermined"


def quasi_equilibria(p: ModelParams, tol: float = ROOT_TOL) -> list[float]:
    """Radii of quasi-equilibrium cycles: roots of Q1 where the field lives.

    On these circles the angular velocity of the resonance-free part
    vanishes and orbits reverse their rotation direction.  A root is
    excluded only when the whole circle consists of genuine equilibria,
    which happens exactly when b = 0 and P1 vanishes there too.
    """
    q1 = angular_polynomial(p)
    if q1.degree <= 0:
        return []
    p1 = dissipative_polynomial(p)
    out = []
    for r, _ in positive_roots(q1, tol):
        if p.b == 0.0:
            scale = sum(abs(c) * r ** i for i, c in enumerate(p1.coefficients)) or 1.0
            if abs(p1(r)) <= 1e-12 * scale:
                continue  # circle of true equilibria, not a quasi-equilibrium
        out.append(r)
    return out


def radial_limit_cycles(p: ModelParams, tol: float = ROOT_TOL) -> list[tuple[float, str]]:
    """Limit-cycle radii of the resonance-free field: roots of P1.

    Exact circles only when b = 0; for small b != 0 the radii are seeds and
    the caller flags them approximate.  A negative-going sign change of P1
    across the root means the cycle attracts.
    """
    p1 = dissipative_polynomial(p)
    if p1.degree <= 0:
        return []
    dp1 = p1.derivative()
    out = []
    for r, mult in positive_roots(p1, tol):
        if mult % 2 == 0:
            stability = "semistable"
        else:
            stability = "stable" if dp1(r) < 0 else "unstable"
        out.append((r, stability))
    return out
