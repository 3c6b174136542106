"""Coefficients and pointwise evaluation of the weak-resonance field.

The model is the planar complex equation

    z' = eps*z + z*A(|z|^2) + B*conj(z)^(n-1),
    A(u) = sum_k (a1_k + i*a2_k) * u^k,   k = 1..s,   s = floor(n/2) - 1,

with eps = eps1 + i*eps2 and B = b1 + i*b2.  The field is equivariant
under rotation by 2*pi/n.  This module owns the coefficient container and
evaluates the field, its divergence and the energy function in Cartesian
and polar coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

TWO_PI = 2.0 * math.pi


class NotNormalizedError(ValueError):
    """Raised when an operation needs b2 == 0, b1 >= 0 coefficients."""


def coeff_count(n: int) -> int:
    """Number of amplitude-series coefficients: floor(n/2) - 1."""
    return n // 2 - 1


@dataclass(frozen=True)
class ModelParams:
    """Full coefficient set of the field.

    a1/a2 hold the real/imaginary parts of the cubic-and-up series
    coefficients, ordered by power; both must have exactly
    ``floor(n/2) - 1`` entries.
    """

    n: int
    eps1: float = 0.0
    eps2: float = 0.0
    a1: tuple[float, ...] = ()
    a2: tuple[float, ...] = ()
    b1: float = 0.0
    b2: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 4:
            raise ValueError(f"resonance order n must be an integer >= 4, got {self.n!r}")
        s = coeff_count(self.n)
        object.__setattr__(self, "a1", tuple(float(v) for v in self.a1))
        object.__setattr__(self, "a2", tuple(float(v) for v in self.a2))
        if len(self.a1) != s or len(self.a2) != s:
            raise ValueError(
                f"n={self.n} needs exactly s={s} series coefficients, "
                f"got {len(self.a1)} (a1) and {len(self.a2)} (a2)"
            )
        for name in ("eps1", "eps2", "b1", "b2"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)
        if not all(math.isfinite(v) for v in self.a1 + self.a2):
            raise ValueError("series coefficients must be finite")

    @property
    def s(self) -> int:
        return coeff_count(self.n)

    @property
    def b(self) -> float:
        """Modulus of the resonant coefficient, sqrt(b1^2 + b2^2)."""
        return math.hypot(self.b1, self.b2)

    @property
    def is_normalized(self) -> bool:
        return self.b2 == 0.0 and self.b1 >= 0.0


@dataclass(frozen=True)
class PolarPoint:
    r: float
    phi: float

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"radius must be >= 0, got {self.r}")
        object.__setattr__(self, "phi", float(self.phi) % TWO_PI)
        object.__setattr__(self, "r", float(self.r))

    def to_cartesian(self) -> "CartPoint":
        return CartPoint(self.r * math.cos(self.phi), self.r * math.sin(self.phi))


@dataclass(frozen=True)
class PolarVelocity:
    dr: float
    dphi: float


@dataclass(frozen=True)
class CartPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")

    def to_polar(self) -> PolarPoint:
        return PolarPoint(math.hypot(self.x, self.y), math.atan2(self.y, self.x))


@dataclass(frozen=True)
class CartVelocity:
    dx: float
    dy: float


def normalize_rotation(p: ModelParams) -> tuple[ModelParams, float]:
    """Rotate the phase plane so the resonant coefficient becomes real >= 0.

    Returns ``(params, beta)`` where beta = atan2(b2, b1).  Writing
    B = |B|*exp(i*beta), the substitution z -> z*exp(i*beta/n) leaves every
    term of the field unchanged except the resonant one, whose coefficient
    becomes |B|.  All radial quantities (equilibrium radii, root counts,
    pattern counts) are preserved; the plane itself is rotated by beta/n.
    """
    if p.b2 == 0.0 and p.b1 >= 0.0:
        return p, 0.0
    beta = math.atan2(p.b2, p.b1)
    return replace(p, b1=math.hypot(p.b1, p.b2), b2=0.0), beta


def amplitude_series(p: ModelParams, r2: float) -> complex:
    """A(r^2) = sum_k (a1_k + i*a2_k) r^(2k), evaluated by Horner."""
    acc = 0j
    for ar, ai in zip(reversed(p.a1), reversed(p.a2)):
        acc = (acc + complex(ar, ai)) * r2
    return acc


def eval_cartesian(p: ModelParams, pt: CartPoint) -> CartVelocity:
    """Velocity (dx, dy) at a Cartesian point, valid for any b1, b2.

    Evaluated through complex arithmetic on z = x + i*y rather than the
    expanded degree-(n-1) real polynomials.
    """
    z = complex(pt.x, pt.y)
    f = (
        complex(p.eps1, p.eps2) * z
        + z * amplitude_series(p, pt.x * pt.x + pt.y * pt.y)
        + complex(p.b1, p.b2) * z.conjugate() ** (p.n - 1)
    )
    return CartVelocity(f.real, f.imag)


def eval_polar(p: ModelParams, pt: PolarPoint) -> PolarVelocity:
    """Velocity (dr, dphi) at a polar point.

    Requires rotation-normalized coefficients (b2 = 0, b1 >= 0):

        dr   = r*(eps1 + sum a1_k r^(2k) + b*r^(n-2)*cos(n*phi))
        dphi =    eps2 + sum a2_k r^(2k) - b*r^(n-2)*sin(n*phi)
    """
    if not p.is_normalized:
        raise NotNormalizedError(
            "eval_polar needs rotation-normalized params; call normalize_rotation first"
        )
    r, phi = pt.r, pt.phi
    r2 = r * r
    acc1 = 0.0
    acc2 = 0.0
    for ar, ai in zip(reversed(p.a1), reversed(p.a2)):
        acc1 = (acc1 + ar) * r2
        acc2 = (acc2 + ai) * r2
    res = p.b1 * r ** (p.n - 2) if r > 0.0 else 0.0
    dr = r * (p.eps1 + acc1 + res * math.cos(p.n * phi))
    dphi = p.eps2 + acc2 - res * math.sin(p.n * phi)
    return PolarVelocity(dr, dphi)


def divergence(p: ModelParams, r: float) -> float:
    """div F = 2*(eps1 + sum (k+1)*a1_k r^(2k)); radially symmetric.

    Identically zero for all r exactly when eps1 = 0 and every a1_k = 0,
    which is the Hamiltonian condition.
    """
    r2 = r * r
    acc = 0.0
    for k in range(len(p.a1), 0, -1):
        acc = (acc + (k + 1) * p.a1[k - 1]) * r2
    return 2.0 * (p.eps1 + acc)


def is_hamiltonian(p: ModelParams, tol: float = 0.0) -> bool:
    """True iff the dissipative coefficients vanish within tol."""
    if tol < 0:
        raise ValueError("tol must be >= 0")
    return abs(p.eps1) <= tol and all(abs(a) <= tol for a in p.a1)


def hamiltonian(p: ModelParams, pt: PolarPoint) -> float:
    """Energy H(r, phi) = eps2*r^2/2 + sum a2_k r^(2k+2)/(2k+2) - b*r^n/n*sin(n*phi).

    The additive constant is fixed to 0 so H(origin) = 0.  H is a conserved
    quantity when the Hamiltonian condition holds exactly; otherwise it acts
    as a generalized Lyapunov function with derivative dH_dt.
    """
    if not p.is_normalized:
        raise NotNormalizedError("hamiltonian needs rotation-normalized params")
    r, phi = pt.r, pt.phi
    r2 = r * r
    acc = 0.0
    for k in range(len(p.a2), 0, -1):
        acc = (acc + p.a2[k - 1] / (2 * k + 2)) * r2
    h = r2 * (p.eps2 / 2.0 + acc)
    if p.b1 != 0.0 and r > 0.0:
        h -= p.b1 * r ** p.n / p.n * math.sin(p.n * phi)
    return h


def hamiltonian_gradient(p: ModelParams, pt: PolarPoint) -> tuple[float, float]:
    """(dH/dr, dH/dphi) of the energy function at a polar point."""
    if not p.is_normalized:
        raise NotNormalizedError("hamiltonian_gradient needs rotation-normalized params")
    r, phi = pt.r, pt.phi
    r2 = r * r
    acc = 0.0
    for ai in reversed(p.a2):
        acc = (acc + ai) * r2
    h_r = r * (p.eps2 + acc)
    h_phi = 0.0
    if p.b1 != 0.0 and r > 0.0:
        h_r -= p.b1 * r ** (p.n - 1) * math.sin(p.n * phi)
        h_phi = -p.b1 * r ** p.n * math.cos(p.n * phi)
    return h_r, h_phi


def dH_dt(p: ModelParams, pt: PolarPoint) -> float:
    """Chain-rule derivative of H along the full field.

    Zero identically under the Hamiltonian condition; O(eps1, a1) otherwise.
    """
    h_r, h_phi = hamiltonian_gradient(p, pt)
    v = eval_polar(p, pt)
    return h_r * v.dr + h_phi * v.dphi


def make_field(p: ModelParams) -> Callable[[float, float], tuple[float, float]]:
    """Fast scalar evaluator (x, y) -> (dx, dy) with coefficients bound in."""
    eps = complex(p.eps1, p.eps2)
    bc = complex(p.b1, p.b2)
    coeffs = tuple(complex(ar, ai) for ar, ai in zip(p.a1, p.a2))
    m = p.n - 1

    def f(x: float, y: float) -> tuple[float, float]:
        z = complex(x, y)
        r2 = x * x + y * y
        acc = 0j
        for c in reversed(coeffs):
            acc = (acc + c) * r2
        w = eps * z + z * acc + bc * z.conjugate() ** m
        return w.real, w.imag

    return f


def cartesian_jacobian(p: ModelParams, pt: CartPoint) -> tuple[tuple[float, float], tuple[float, float]]:
    """Exact Jacobian of the Cartesian field via Wirtinger derivatives.

    With f = eps*z + z*A(|z|^2) + B*conj(z)^(n-1):
        df/dz    = eps + A(r^2) + r^2 A'(r^2)
        df/dzbar = z^2 A'(r^2) + (n-1) B conj(z)^(n-2)
    and the real Jacobian follows from f_x = f_z + f_zbar,
    f_y = i*(f_z - f_zbar).
    """
    z = complex(pt.x, pt.y)
    r2 = pt.x * pt.x + pt.y * pt.y
    a = 0j
    ap = 0j
    for k in range(len(p.a1), 0, -1):
        c = complex(p.a1[k - 1], p.a2[k - 1])
        a = (a + c) * r2
        ap = ap * r2 + k * c
    f_z = complex(p.eps1, p.eps2) + a + r2 * ap
    f_zbar = z * z * ap + (p.n - 1) * complex(p.b1, p.b2) * z.conjugate() ** (p.n - 2)
    f_x = f_z + f_zbar
    f_y = 1j * (f_z - f_zbar)
    return ((f_x.real, f_y.real), (f_x.imag, f_y.imag))


def polar_to_cart_velocity(pt: PolarPoint, v: PolarVelocity) -> CartVelocity:
    c, s = math.cos(pt.phi), math.sin(pt.phi)
    return CartVelocity(v.dr * c - pt.r * v.dphi * s, v.dr * s + pt.r * v.dphi * c)


def cart_to_polar_velocity(pt: CartPoint, v: CartVelocity) -> PolarVelocity:
    """Invert the polar/Cartesian velocity identity; needs r > 0."""
    r = math.hypot(pt.x, pt.y)
    if r == 0.0:
        raise ValueError("polar velocity undefined at the origin")
    c, s = pt.x / r, pt.y / r
    return PolarVelocity(v.dx * c + v.dy * s, (v.dy * c - v.dx * s) / r)
