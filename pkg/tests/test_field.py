import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from meander.field import (
    CartPoint,
    ModelParams,
    NotNormalizedError,
    PolarPoint,
    cart_to_polar_velocity,
    cartesian_jacobian,
    dH_dt,
    divergence,
    eval_cartesian,
    eval_polar,
    hamiltonian,
    is_hamiltonian,
    make_field,
    normalize_rotation,
)
from meander.integrator import IntegrateOptions, integrate_orbit

TWO_PI = 2 * math.pi


def params_st(n_values=(4, 5, 6, 7, 9)):
    def build(n, draw_scalars):
        s = n // 2 - 1
        vals = draw_scalars
        return ModelParams(
            n=n,
            eps1=vals[0], eps2=vals[1],
            a1=tuple(vals[2:2 + s]), a2=tuple(vals[2 + s:2 + 2 * s]),
            b1=vals[-2], b2=vals[-1],
        )
    finite = st.floats(-3, 3, allow_nan=False, width=32)
    return st.sampled_from(n_values).flatmap(
        lambda n: st.lists(finite, min_size=2 * (n // 2 - 1) + 4,
                           max_size=2 * (n // 2 - 1) + 4).map(lambda v: build(n, v))
    )


class TestModelParams:
    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            ModelParams(n=3, a1=(), a2=())

    def test_rejects_wrong_list_length(self):
        with pytest.raises(ValueError):
            ModelParams(n=6, a1=(0.0,), a2=(0.0, 0.0))

    def test_coefficient_count(self):
        assert ModelParams(n=4, a1=(0,), a2=(0,)).s == 1
        assert ModelParams(n=5, a1=(0,), a2=(0,)).s == 1
        assert ModelParams(n=9, a1=(0, 0, 0), a2=(0, 0, 0)).s == 3
        assert ModelParams(n=11, a1=(0,) * 4, a2=(0,) * 4).s == 4

    def test_b_modulus(self):
        p = ModelParams(n=4, a1=(0,), a2=(0,), b1=3.0, b2=4.0)
        assert p.b == pytest.approx(5.0)


class TestNormalizeRotation:
    def test_already_normalized(self):
        p = ModelParams(n=5, a1=(0,), a2=(0,), b1=3.0)
        q, beta = normalize_rotation(p)
        assert q is p and beta == 0.0

    def test_quarter_turn(self):
        p = ModelParams(n=5, a1=(0,), a2=(0,), b1=0.0, b2=1.0)
        q, beta = normalize_rotation(p)
        assert q.b1 == pytest.approx(1.0) and q.b2 == 0.0
        assert beta == pytest.approx(math.pi / 2)

    def test_three_four_five(self):
        p = ModelParams(n=5, eps1=0.1, eps2=-0.4, a1=(0.02,), a2=(0.7,), b1=3.0, b2=4.0)
        q, beta = normalize_rotation(p)
        assert q.b1 == pytest.approx(5.0) and q.b2 == 0.0
        assert beta == pytest.approx(math.atan2(4.0, 3.0))
        # the normalized field is the original rotated by beta/n, checked
        # pointwise on a grid of random points
        rng = np.random.default_rng(7)
        rot = cmath.exp(1j * beta / p.n)
        worst = 0.0
        for _ in range(100):
            w = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            z = w * rot
            fz = eval_cartesian(p, CartPoint(z.real, z.imag))
            expected = complex(fz.dx, fz.dy) / rot
            got = eval_cartesian(q, CartPoint(w.real, w.imag))
            worst = max(worst, abs(complex(got.dx, got.dy) - expected))
        assert worst < 1e-12

    def test_negative_b_is_half_sector_turn(self):
        p = ModelParams(n=7, eps2=-0.56, a1=(0, 0), a2=(3.0, -3.5), b1=-1.6)
        q, beta = normalize_rotation(p)
        assert q.b1 == pytest.approx(1.6)
        assert beta == pytest.approx(math.pi)


class TestEvalPolar:
    def test_origin_velocity(self, ex1):
        v = eval_polar(ex1, PolarPoint(0.0, 1.2345))
        assert v.dr == 0.0
        assert v.dphi == ex1.eps2

    def test_peripheral_equilibrium_zero(self, ex1):
        v = eval_polar(ex1, PolarPoint(1.0, math.pi / 10))
        assert abs(v.dphi) < 1e-14
        assert abs(v.dr) < 1e-14

    def test_direct_substitution_n4(self):
        p = ModelParams(n=4, eps1=0.3, eps2=1.0, a1=(0.2,), a2=(1.0,), b1=0.7)
        v = eval_polar(p, PolarPoint(1.0, 0.0))
        assert v.dr == pytest.approx(0.3 + 0.2 + 0.7, abs=1e-14)
        assert v.dphi == pytest.approx(1.0 + 1.0 - 0.0, abs=1e-14)
        w = eval_cartesian(p, CartPoint(1.0, 0.0))
        pv = cart_to_polar_velocity(CartPoint(1.0, 0.0), w)
        assert pv.dr == pytest.approx(v.dr, rel=1e-12)
        assert pv.dphi == pytest.approx(v.dphi, rel=1e-12)

    def test_rejects_unnormalized(self):
        p = ModelParams(n=5, a1=(0,), a2=(0,), b1=0.0, b2=1.0)
        with pytest.raises(NotNormalizedError):
            eval_polar(p, PolarPoint(1.0, 0.0))


class TestEvalCartesian:
    def test_origin_fixed(self):
        p = ModelParams(n=6, eps1=0.1, eps2=2.0, a1=(1, 2), a2=(3, 4), b1=5.0, b2=6.0)
        v = eval_cartesian(p, CartPoint(0.0, 0.0))
        assert v.dx == 0.0 and v.dy == 0.0

    def test_example1_equilibrium(self, ex1):
        pt = PolarPoint(1.0, math.pi / 10).to_cartesian()
        v = eval_cartesian(ex1, pt)
        assert math.hypot(v.dx, v.dy) < 1e-13

    @given(params_st(), st.floats(1e-3, 3), st.floats(0, TWO_PI))
    def test_polar_cartesian_identity(self, p, r, phi):
        pn, _ = normalize_rotation(p)
        pol = PolarPoint(r, phi)
        pv = eval_polar(pn, pol)
        cv = eval_cartesian(pn, pol.to_cartesian())
        back = cart_to_polar_velocity(pol.to_cartesian(), cv)
        scale = max(1.0, abs(pv.dr), r * abs(pv.dphi))
        assert abs(back.dr - pv.dr) <= 1e-12 * scale
        assert abs(back.dphi - pv.dphi) * r <= 1e-12 * scale

    @given(params_st(), st.floats(1e-3, 3), st.floats(0, TWO_PI))
    def test_equivariance(self, p, r, phi):
        pn, _ = normalize_rotation(p)
        v1 = eval_polar(pn, PolarPoint(r, phi))
        v2 = eval_polar(pn, PolarPoint(r, phi + TWO_PI / pn.n))
        scale = max(1.0, abs(v1.dr), abs(v1.dphi))
        assert abs(v1.dr - v2.dr) <= 1e-12 * scale
        assert abs(v1.dphi - v2.dphi) <= 1e-12 * scale

    def test_make_field_matches(self, ex1):
        f = make_field(ex1)
        v = eval_cartesian(ex1, CartPoint(0.7, -0.4))
        assert f(0.7, -0.4) == (v.dx, v.dy)


class TestDivergence:
    def test_hamiltonian_zero(self):
        p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0)
        for r in (0.0, 0.5, 1.7):
            assert divergence(p, r) == 0.0

    def test_only_linear_term_at_origin(self):
        p = ModelParams(n=6, eps1=0.5, a1=(0, 0), a2=(0, 0))
        assert divergence(p, 0.0) == pytest.approx(1.0)

    def test_weighted_series(self):
        p = ModelParams(n=5, eps1=0.0, a1=(-0.01,), a2=(0.0,))
        assert divergence(p, 1.0) == pytest.approx(-0.04)

    def test_matches_finite_difference(self):
        p = ModelParams(n=5, eps1=0.02, eps2=1.0, a1=(-0.01,), a2=(-1.0,), b1=0.3)
        f = make_field(p)
        h = 1e-6
        for k in range(10):
            phi = TWO_PI * k / 10
            x, y = math.cos(phi), math.sin(phi)
            fd = ((f(x + h, y)[0] - f(x - h, y)[0]) / (2 * h)
                  + (f(x, y + h)[1] - f(x, y - h)[1]) / (2 * h))
            assert fd == pytest.approx(divergence(p, 1.0), abs=1e-6)

    @given(params_st())
    def test_zero_divergence_iff_hamiltonian(self, p):
        rng = np.random.default_rng(0)
        all_zero = all(divergence(p, r) == 0.0 for r in rng.uniform(0.01, 3, size=20))
        assert all_zero == is_hamiltonian(p, tol=0.0)


class TestIsHamiltonian:
    def test_exact(self):
        assert is_hamiltonian(ModelParams(n=4, eps1=0.0, a1=(0.0,), a2=(1.0,)), tol=0.0)

    def test_strict_threshold(self):
        assert not is_hamiltonian(ModelParams(n=4, eps1=1e-9, a1=(0.0,), a2=(0.0,)), tol=0.0)

    def test_perturbative_band(self):
        p = ModelParams(n=5, eps1=0.005, a1=(-0.01,), a2=(0.0,))
        assert is_hamiltonian(p, tol=0.02)
        assert not is_hamiltonian(p, tol=0.001)

    def test_negative_tol_rejected(self):
        with pytest.raises(ValueError):
            is_hamiltonian(ModelParams(n=4, a1=(0,), a2=(0,)), tol=-1.0)


class TestHamiltonian:
    def test_zero_at_origin(self, ex1):
        assert hamiltonian(ex1, PolarPoint(0.0, 0.3)) == 0.0

    def test_direct_value_n4(self):
        p = ModelParams(n=4, eps2=1.0, a1=(0.0,), a2=(1.0,), b1=0.7)
        h = hamiltonian(p, PolarPoint(1.0, math.pi / 8))
        assert h == pytest.approx(0.5 + 0.25 - 0.7 / 4, abs=1e-14)

    def test_symmetric_saddle_levels(self, ex1):
        vals = [hamiltonian(ex1, PolarPoint(2 / 3, -math.pi / 10 + TWO_PI * j / 5))
                for j in range(5)]
        assert max(vals) - min(vals) < 1e-14

    def test_conserved_along_orbit(self, ex1):
        start = PolarPoint(0.3, 0.0).to_cartesian()
        orbit = integrate_orbit(ex1, start, IntegrateOptions(max_time=50.0))
        h0 = hamiltonian(ex1, PolarPoint(0.3, 0.0))
        assert orbit.h_drift is not None
        assert orbit.h_drift <= 1e-6 * (1 + abs(h0))


class TestDHDt:
    def test_zero_for_hamiltonian(self, ex1):
        rng = np.random.default_rng(3)
        for _ in range(20):
            pt = PolarPoint(rng.uniform(0.01, 3), rng.uniform(0, TWO_PI))
            assert abs(dH_dt(ex1, pt)) < 1e-12 * max(1.0, pt.r ** ex1.n)

    def test_zero_at_origin(self, dissipative_n5):
        assert dH_dt(dissipative_n5, PolarPoint(0.0, 0.0)) == 0.0

    def test_small_and_matches_orbit_derivative(self):
        # weakly perturbed ring portrait: dH/dt is O(eps1, a1), not zero
        p = ModelParams(n=5, eps1=0.005, eps2=-4.0, a1=(-0.01,), a2=(7.0,), b1=3.0)
        val = dH_dt(p, PolarPoint(1.0, 0.0))
        assert val != 0.0
        assert abs(val) < 0.1
        orbit = integrate_orbit(p, PolarPoint(1.0, 0.0).to_cartesian(),
                                IntegrateOptions(max_time=0.5, detect_closure=False))
        # central difference of H over a short controlled interval +-delta
        # around a handful of orbit samples
        delta = 1e-4
        short = IntegrateOptions(max_time=delta, detect_closure=False)
        for i in range(1, len(orbit.samples) - 1, max(1, len(orbit.samples) // 5)):
            _, x, y = orbit.samples[i]
            fwd = integrate_orbit(p, CartPoint(x, y), short, direction=1)
            bwd = integrate_orbit(p, CartPoint(x, y), short, direction=-1)
            h_plus = hamiltonian(p, CartPoint(fwd.samples[-1][1], fwd.samples[-1][2]).to_polar())
            h_minus = hamiltonian(p, CartPoint(bwd.samples[-1][1], bwd.samples[-1][2]).to_polar())
            fd = (h_plus - h_minus) / (2 * delta)
            here = dH_dt(p, CartPoint(x, y).to_polar())
            assert fd == pytest.approx(here, abs=1e-5)


class TestCartesianJacobian:
    @given(params_st(), st.floats(-2, 2), st.floats(-2, 2))
    def test_matches_finite_differences(self, p, x, y):
        f = make_field(p)
        (a, b), (c, d) = cartesian_jacobian(p, CartPoint(x, y))
        h = 1e-6 * max(1.0, abs(x), abs(y))
        fd_a = (f(x + h, y)[0] - f(x - h, y)[0]) / (2 * h)
        fd_b = (f(x, y + h)[0] - f(x, y - h)[0]) / (2 * h)
        fd_c = (f(x + h, y)[1] - f(x - h, y)[1]) / (2 * h)
        fd_d = (f(x, y + h)[1] - f(x, y - h)[1]) / (2 * h)
        scale = max(1.0, abs(a), abs(b), abs(c), abs(d))
        assert abs(a - fd_a) <= 2e-4 * scale
        assert abs(b - fd_b) <= 2e-4 * scale
        assert abs(c - fd_c) <= 2e-4 * scale
        assert abs(d - fd_d) <= 2e-4 * scale


class TestRotationInvariance:
    def test_equilibrium_radii_unchanged(self):
        from meander.equilibria import build_radial_polynomials, positive_roots
        p = ModelParams(n=5, eps2=-4.0, a1=(0.0,), a2=(7.0,), b1=3.0 * math.cos(1.1),
                        b2=3.0 * math.sin(1.1))
        q, _ = normalize_rotation(p)
        polys = build_radial_polynomials(q)
        roots = [r for r, _ in positive_roots(polys["Pplus"])]
        assert roots == pytest.approx([1.0, 2.0], abs=1e-12)
