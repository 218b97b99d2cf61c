import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringmin import (
    BjorlingData,
    FourierSeries,
    GaussVector,
    SlopeData,
    SolveOptions,
    analyze,
    extend_harmonic,
    neumann_from_beltrami,
    nu_from_gauss,
    slope_neumann,
    solve,
    theta_grid,
    w_neumann,
)
from ringmin.errors import (
    BranchError,
    CompatibilityError,
    DataError,
    EllipticityError,
    GaussVectorError,
    PeriodError,
    SlopeError,
)
from ringmin.io import surface_to_json
from ringmin.verify import random_circle_homeo, random_harmonic

from conftest import assert_close

S5 = math.sqrt(5.0)
ENNEPER_K = (S5 - 1) / (S5 + 1)


def circle_series(m=256):
    return analyze(np.exp(1j * theta_grid(m))).prune(1e-13)


def enneper_gauss(m=256):
    theta = theta_grid(m)
    return tuple(GaussVector(-2 * np.exp(-1j * t) / S5, 1 / S5) for t in theta)


def enneper_data(m=256):
    theta = theta_grid(m)
    return BjorlingData(
        h0=circle_series(m),
        w0=analyze(np.cos(2 * theta)).symmetrized(),
        gauss=enneper_gauss(m),
    )


class TestNuFromGauss:
    def test_north_pole_gives_holomorphic(self):
        samples = tuple(GaussVector(0.0, 1.0) for _ in range(16))
        nu = nu_from_gauss(samples)
        assert nu.magnitude() < 1e-14

    def test_constant_slope_rim(self):
        nu = nu_from_gauss(enneper_gauss())
        assert_close(nu.coeff(-2), -ENNEPER_K, atol=1e-13)
        assert nu.prune(1e-12).coeffs.keys() == {-2}

    def test_stereographic_roundtrip(self):
        # normals of the catenoid at radius rho invert to nu = -1/zbar^2
        rho = 1.7
        theta = theta_grid(64)
        z = rho * np.exp(1j * theta)
        samples = tuple(
            GaussVector(2 * zz / (1 + rho**2), (rho**2 - 1) / (rho**2 + 1))
            for zz in z
        )
        nu = nu_from_gauss(samples)
        expected = -np.exp(2j * theta) / rho**2
        assert np.max(np.abs(nu.values(theta) - expected)) < 1e-12

    def test_rejects_southern_normal(self):
        with pytest.raises(SlopeError):
            nu_from_gauss((GaussVector(0.0, -1.0),))

    def test_rejects_non_unit_vector(self):
        bad = GaussVector.__new__(GaussVector)
        object.__setattr__(bad, "xi", 0.5 + 0j)
        object.__setattr__(bad, "tau", 0.5)
        with pytest.raises(GaussVectorError):
            nu_from_gauss((bad,))


class TestNeumannFromBeltrami:
    def test_holomorphic_case(self):
        h0 = circle_series()
        q = neumann_from_beltrami(h0, FourierSeries.from_coeffs({}))
        assert_close(q.coeff(1), 1.0, atol=1e-13)
        assert q.prune(1e-12).coeffs.keys() == {1}

    def test_constant_slope_rim(self):
        h0 = circle_series()
        nu0 = FourierSeries.from_coeffs({-2: -ENNEPER_K})
        q = neumann_from_beltrami(h0, nu0)
        assert_close(q.coeff(1), 3 / S5, atol=1e-13)
        assert_close(q.coeff(-3), -2 / S5, atol=1e-13)

    @pytest.mark.parametrize("ups", [0.25, 0.6, 1.0])
    def test_circle_evolution_family(self, ups):
        h0 = circle_series()
        nu0 = FourierSeries.from_coeffs({2: (ups - 1) / (ups + 1)})
        q = neumann_from_beltrami(h0, nu0)
        assert_close(q.coeff(1), ups, atol=1e-13)

    def test_ellipticity_guard(self):
        with pytest.raises(EllipticityError):
            neumann_from_beltrami(circle_series(), FourierSeries.from_coeffs({0: 1.2}))


class TestExtendHarmonic:
    def test_identity(self):
        p = FourierSeries.from_coeffs({1: 1.0})
        h = extend_harmonic(p, p)
        assert h.pairs == {1: (1.0, 0.0)}

    def test_circle_evolution(self):
        ups = 0.4
        p = FourierSeries.from_coeffs({1: 1.0})
        q = FourierSeries.from_coeffs({1: ups})
        h = extend_harmonic(p, q)
        a, b = h.pairs[1]
        assert_close(a, (1 + ups) / 2)
        assert_close(b, (1 - ups) / 2)

    def test_constant_slope_rim_coefficients(self):
        p = FourierSeries.from_coeffs({1: 1.0})
        q = FourierSeries.from_coeffs({1: 3 / S5, -3: -2 / S5})
        h = extend_harmonic(p, q)
        a1, b1 = h.pairs[1]
        am3, bm3 = h.pairs[-3]
        assert_close(a1, 0.5 * (1 + 3 / S5))
        assert_close(b1, 0.5 * (1 - 3 / S5))
        assert_close(am3, 1 / (3 * S5))
        assert_close(bm3, -1 / (3 * S5))

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 10**6))
    def test_reproduces_cauchy_data(self, seed):
        h = random_harmonic(seed, degree=8, with_log=True)
        p, q = h.restrict(1.0), h.radial_trace(1.0)
        g = extend_harmonic(p, q)
        scale = h.magnitude() or 1.0
        for n in set(h.pairs) | set(g.pairs):
            ha = h.pairs.get(n, (0.0, 0.0))
            ga = g.pairs.get(n, (0.0, 0.0))
            assert abs(ha[0] - ga[0]) <= 1e-12 * scale
            assert abs(ha[1] - ga[1]) <= 1e-12 * scale
        assert abs(h.log_coeff - g.log_coeff) <= 1e-12 * scale
        assert abs(h.constant - g.constant) <= 1e-12 * scale


class TestWNeumann:
    def test_flat_graph(self):
        samples = tuple(GaussVector(0.0, 1.0) for _ in range(32))
        q = w_neumann(FourierSeries.from_coeffs({1: 1.0}), samples)
        assert q.magnitude() < 1e-14

    def test_constant_slope_rim(self):
        h_rho = FourierSeries.from_coeffs({1: 3 / S5, -3: -2 / S5})
        q = w_neumann(h_rho, enneper_gauss())
        assert_close(q.coeff(2), 1 / S5, atol=1e-13)
        assert_close(q.coeff(-2), 1 / S5, atol=1e-13)
        vals = q.values(theta_grid(16))
        assert_close(vals, (2 / S5) * np.cos(2 * theta_grid(16)), atol=1e-12)


class TestSolve:
    def test_flat_data(self):
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({}),
        )
        surf, report = solve(data)
        pairs = surf.h.prune(1e-12).pairs
        assert set(pairs) == {1}
        assert_close(pairs[1][0], 1.0, atol=1e-13)
        assert_close(pairs[1][1], 0.0, atol=1e-13)
        assert surf.w.magnitude() < 1e-12
        assert report.residual_max < 1e-12

    @pytest.mark.parametrize("ups", [0.3, 0.8])
    def test_catenoid_family(self, ups):
        kappa = (1 - ups) / (1 + ups)
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({2: -kappa}),
        )
        surf, report = solve(data)
        a, b = surf.h.prune(1e-12).pairs[1]
        assert_close(a, (1 + ups) / 2, atol=1e-10)
        assert_close(b, (1 - ups) / 2, atol=1e-10)
        assert_close(
            surf.w.log_coeff, 2 * math.sqrt(kappa) / (1 + kappa), atol=1e-10
        )
        assert report.w_crosscheck < 1e-10
        # inner validity radius sits at the Jacobian degeneracy sqrt(kappa)
        assert surf.annulus.r == pytest.approx(kappa**0.5, rel=0.05)

    def test_paraboloid_rim_closed_form(self):
        surf, report = solve(enneper_data())
        h, w = surf.h, surf.w
        a1, b1 = h.prune(1e-12).pairs[1]
        assert_close(a1, 0.5 * (1 + 3 / S5), atol=1e-12)
        assert_close(b1, 0.5 * (1 - 3 / S5), atol=1e-12)
        alpha, beta = w.prune(1e-12).pairs[2]
        assert_close(alpha, 0.25 + 0.25 / S5, atol=1e-12)
        assert_close(beta, 0.25 - 0.25 / S5, atol=1e-12)
        assert report.residual_max < 1e-12
        assert report.w_crosscheck < 1e-12

    def test_helicoid_data_is_obstructed(self):
        k = (math.sqrt(2) - 1) / (math.sqrt(2) + 1)
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({2: k}),
        )
        with pytest.raises(PeriodError) as err:
            solve(data)
        assert err.value.defect == pytest.approx(2 * math.pi, abs=1e-8)

    def test_ellipticity_failure(self):
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({2: 1.2}),
        )
        with pytest.raises(EllipticityError):
            solve(data)

    def test_odd_winding_nu_is_rejected(self):
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({1: 0.5}),
        )
        with pytest.raises(BranchError):
            solve(data)

    def test_degenerate_tangent_rejected(self):
        data = BjorlingData(
            h0=FourierSeries.from_coeffs({0: 1.0}),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({}),
        )
        with pytest.raises(DataError):
            solve(data)

    def test_needs_exactly_one_normal_prescription(self):
        with pytest.raises(DataError):
            BjorlingData(
                h0=circle_series(),
                w0=FourierSeries.from_coeffs({}),
            )

    def test_boundary_beltrami_residual(self):
        # random analytic trace data, squared (hence even-winding) nu
        for seed in (3, 17):
            p = random_circle_homeo(seed)
            half = random_harmonic(seed + 99, degree=3)
            vals = half.restrict(1.0).sample(256) ** 2
            vals *= 0.6 / np.max(np.abs(vals))
            nu0 = analyze(vals).prune()
            h = extend_harmonic(p, neumann_from_beltrami(p, nu0))
            z = np.exp(1j * theta_grid(512))
            hz, hzb = h.wirtinger(z)
            resid = np.abs(hzb - nu0.values(theta_grid(512)) * np.conj(hz))
            assert np.max(resid) <= 1e-10 * np.max(np.abs(hz))
            # Cauchy data reproduction
            tr = h.restrict(1.0)
            assert max(
                abs(tr.coeff(n) - p.coeff(n)) for n in set(tr.coeffs) | set(p.coeffs)
            ) <= 1e-12 * p.magnitude()

    def test_determinism(self):
        data = enneper_data()
        s1, r1 = solve(data)
        s2, r2 = solve(data)
        doc1 = json.dumps(surface_to_json(s1, r1), sort_keys=True)
        doc2 = json.dumps(surface_to_json(s2, r2), sort_keys=True)
        assert doc1 == doc2

    def test_inconsistent_height_data_gives_empty_annulus(self):
        # correct Beltrami prescription but a height trace that belongs to a
        # different surface: conformality fails already on |z| = 1
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({1: 0.5, -1: 0.5}),
            nu0=FourierSeries.from_coeffs({2: -0.25}),
        )
        with pytest.raises(DataError, match="empty validity annulus"):
            solve(data)

    def test_sign_flag_reflects_height(self):
        kappa = 0.25
        data = BjorlingData(
            h0=circle_series(),
            w0=FourierSeries.from_coeffs({}),
            nu0=FourierSeries.from_coeffs({2: -kappa}),
        )
        up, _ = solve(data, SolveOptions(sign=1))
        down, _ = solve(data, SolveOptions(sign=-1))
        assert_close(up.w.log_coeff, -down.w.log_coeff, atol=1e-12)


class TestSlopeNeumann:
    def test_constant_slope_slab(self):
        m = 256
        K = 2.0
        data = SlopeData(
            h0=circle_series(m),
            w0=FourierSeries.from_coeffs({}),
            K=np.full(m, K),
        )
        h_rho, w_rho = slope_neumann(data)
        assert_close(w_rho.coeff(0), math.sqrt(K * K - 1) / K, atol=1e-13)
        assert_close(h_rho.coeff(1), 1 / K, atol=1e-13)

    def test_conformal_slope(self):
        m = 128
        data = SlopeData(
            h0=circle_series(m),
            w0=FourierSeries.from_coeffs({}),
            K=np.ones(m),
        )
        h_rho, w_rho = slope_neumann(data)
        assert w_rho.magnitude() < 1e-13
        assert_close(h_rho.coeff(1), 1.0, atol=1e-13)  # h_rho = -i h_theta

    def test_ellipse_with_matching_slope_is_flat(self):
        m = 256
        tau = 0.6
        lam = math.sqrt(1 / tau**2 - 1)
        theta = theta_grid(m)
        data = SlopeData(
            h0=circle_series(m),
            w0=analyze(lam * np.cos(theta)).symmetrized(),
            K=np.full(m, 1 / tau),
        )
        h_rho, w_rho = slope_neumann(data)
        h = extend_harmonic(data.h0, h_rho).prune()
        w = extend_harmonic(data.w0, w_rho).prune()
        z = np.exp(np.linspace(-0.2, 0.2, 7))[:, None] * np.exp(
            1j * theta_grid(64)
        )[None, :]
        hz, hzb = h.wirtinger(z)
        wz, _ = w.wirtinger(z)
        resid = np.abs(hz * np.conj(hzb) + wz * wz)
        assert np.max(resid) < 1e-12
        # the image lies in the plane w = lam * u
        assert np.max(np.abs(np.real(w.eval(z)) - lam * np.real(h.eval(z)))) < 1e-12

    def test_compatibility_violation_reports_worst_angle(self):
        m = 128
        theta = theta_grid(m)
        data = SlopeData(
            h0=circle_series(m),
            w0=analyze(5.0 * np.sin(theta)).symmetrized(),
            K=np.full(m, 1.2),
        )
        with pytest.raises(CompatibilityError) as err:
            slope_neumann(data)
        assert abs(err.value.margin) > 0

    def test_outwardness(self):
        m = 256
        theta = theta_grid(m)
        p = random_circle_homeo(21)
        data = SlopeData(
            h0=p,
            w0=analyze(0.1 * np.cos(3 * theta)).symmetrized(),
            K=np.full(m, 3.0),
        )
        h_rho, _ = slope_neumann(data)
        ht = p.deriv().values(theta)
        ratio = h_rho.values(theta) / ht
        assert np.max(ratio.imag) <= 1e-12

    def test_inner_boundary_speed(self):
        # h0 a circle homeomorphism: |h|_rho >= |h_theta| / K pointwise
        m = 256
        theta = theta_grid(m)
        p = random_circle_homeo(33)
        K = 2.5
        data = SlopeData(
            h0=p,
            w0=analyze(0.2 * np.sin(2 * theta)).symmetrized(),
            K=np.full(m, K),
        )
        h_rho, _ = slope_neumann(data)
        hv = p.values(theta)
        speed = (np.conj(hv) * h_rho.values(theta)).real / np.abs(hv)
        ht = np.abs(p.deriv().values(theta))
        assert np.min(speed - ht / K) >= -1e-10

    def test_rejects_subunit_slope(self):
        with pytest.raises(DataError):
            SlopeData(
                h0=circle_series(16),
                w0=FourierSeries.from_coeffs({}),
                K=np.full(16, 0.5),
            )
