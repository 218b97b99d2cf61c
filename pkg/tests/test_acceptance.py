"""Acceptance suite: one test per numbered criterion, each printing a
pass/fail line with the measured quantities at the stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Criterion 4 carries a known discrepancy: the quoted sextic has its
root in (6.9, 6.95), but the example map provably vanishes at the root of
4 x^6 - 48 x^4 + 3 x^2 - 4 (about 3.456) instead, so the final clause of
that criterion cannot hold; the test states it faithfully and fails.
"""
import math

import numpy as np
import pytest

from ringmin import (
    AnnularHarmonic,
    BjorlingData,
    BoundRequest,
    FourierSeries,
    GaussVector,
    analyze,
    bound,
    bound_chain_check,
    conformality_report,
    disk_extension,
    fixture,
    image_radii,
    jacobian_energy_gap,
    period_defect,
    positive_definite_sweep,
    principal,
    prop51,
    prop52_terms,
    qform_assembly_check,
    qform_coeffs,
    quadrature_mean,
    random_circle_homeo,
    random_harmonic,
    solve,
    theta_grid,
)
from ringmin.extremals import example32_stated_root
from ringmin.verify import SQRT7

S5 = math.sqrt(5.0)


def report(criterion, ok, detail):
    print(f"[acceptance] {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{criterion}: {detail}"


def test_criterion_01_paraboloid_rim_reproduction():
    m = 256
    theta = theta_grid(m)
    data = BjorlingData(
        h0=analyze(np.exp(1j * theta)).prune(1e-13),
        w0=analyze(np.cos(2 * theta)).symmetrized().prune(1e-13),
        gauss=tuple(GaussVector(-2 * np.exp(-1j * t) / S5, 1 / S5) for t in theta),
    )
    surf, _ = solve(data)
    closed = fixture("paraboloid_enneper")
    rho = np.linspace(0.8, 1.25, 32)
    z = rho[:, None] * np.exp(1j * theta_grid(128))[None, :]
    h_gap = float(np.max(np.abs(surf.h.eval(z) - closed.h.eval(z))))
    w_gap = float(np.max(np.abs(surf.w.eval(z) - closed.w.eval(z))))
    ok = h_gap <= 1e-10 and w_gap <= 1e-10
    report("C01 rim reproduction", ok, f"h gap {h_gap:.2e}, w gap {w_gap:.2e}")


def test_criterion_02_inner_boundary_bound_equality():
    worst = 0.0
    for K in (1.5, 2.0, 5.0):
        surf = fixture("extremal_th34", K=K)
        for R in (1.5, 2.0, 4.0):
            rms = image_radii(surf.h, R)[2]
            target = (K + 1) * R / (2 * K) + (K - 1) / (2 * K * R)
            worst = max(worst, abs(rms - target))
    report("C02 extremal equality", worst <= 1e-12, f"max |rms - bound| {worst:.2e}")


def test_criterion_03_fixture_conformality():
    worst = 0.0
    for name in ("catenoid", "enneper", "example32", "catenoidal_slab"):
        resid, scale = conformality_report(fixture(name))
        worst = max(worst, resid / scale)
    report("C03 conformality", worst <= 1e-10, f"max relative residual {worst:.2e}")


def test_criterion_04_folded_annulus_example():
    surf = fixture("example32")
    deriv_worst = 0.0
    for z in (2j, -2j):
        hz, hzb = surf.h.wirtinger(z)
        wz, _ = surf.w.wirtinger(z)
        deriv_worst = max(deriv_worst, abs(hz), abs(hzb), abs(wz))
    speed = quadrature_mean(
        lambda z: (np.conj(surf.h.eval(z)) * surf.h.derivatives(z)[2]).real
        / np.abs(surf.h.eval(z)),
        1.0,
        256,
    ).real
    speed_err = abs(speed - 17 / 15)
    root = example32_stated_root()
    in_bracket = 6.9 < root < 6.95
    value_at_root = abs(surf.h.eval(1j * root))
    ok = (
        deriv_worst <= 1e-9
        and speed_err <= 1e-10
        and in_bracket
        and value_at_root <= 1e-8
    )
    report(
        "C04 folded annulus",
        ok,
        f"derivs {deriv_worst:.2e}, speed err {speed_err:.2e}, "
        f"root {root:.5f}, |h(i root)| {value_at_root:.3e} "
        "(the map vanishes at 3.45605, the root of 4x^6-48x^4+3x^2-4)",
    )


def test_criterion_05_height_periods():
    cat = abs(period_defect(principal("sharp"), 2.0))
    hel = abs(period_defect(principal("flat"), 2.0) - 2 * math.pi)
    ok = cat <= 1e-10 and hel <= 1e-8
    report("C05 height periods", ok, f"catenoid {cat:.2e}, helicoid gap {hel:.2e}")


def test_criterion_06_quadratic_form_sweep():
    sweep = positive_definite_sweep(nmax=64)
    q1_rel = 0.0
    for lam in np.arange(1, 21) * 0.05:
        for rho in np.exp(np.linspace(math.log(SQRT7), math.log(20.0), 50)):
            q1 = qform_coeffs(1, float(rho), float(lam))
            q1_rel = max(q1_rel, abs(q1.discriminant) / max(q1.A * q1.B, q1.C**2))
    q0 = qform_coeffs(0, 2.0, 1.0)
    q0_definite = q0.A > 0 and q0.discriminant > 0
    ok = sweep.passed and sweep.min_margin > 0 and q1_rel <= 1e-9 and q0_definite
    report(
        "C06 quadratic forms",
        ok,
        f"sweep min margin {sweep.min_margin:.3e} at "
        f"(n={sweep.arg_n}, lam={sweep.arg_lambda:.2f}, rho={sweep.arg_rho:.3f}), "
        f"mode-1 disc rel {q1_rel:.2e}, mode-0 definite {q0_definite}",
    )


def test_criterion_07_moderate_radius_inequality():
    lams = (-0.5, 0.0, 0.5, 1.0)
    worst = math.inf
    for j in range(200):
        lam = lams[j % 4]
        R = 1 + math.sqrt(3 + 3 * lam)
        h = random_harmonic(42 + j, degree=8, with_log=True)
        lhs, rhs, gap = prop51(h, lam, R)
        worst = min(worst, gap / (1 + max(abs(lhs), abs(rhs))))
    eq_worst = 0.0
    for lam in lams:
        R = 1 + math.sqrt(3 + 3 * lam)
        for c in (1.0, 2.0j):
            h = AnnularHarmonic.from_terms(pairs={1: (c, lam * c)})
            lhs, rhs, _ = prop51(h, lam, R)
            eq_worst = max(eq_worst, abs(lhs) + abs(rhs))
    ok = worst >= -1e-8 and eq_worst <= 1e-10
    report(
        "C07 moderate-radius inequality",
        ok,
        f"200 samples, worst rel gap {worst:.2e}, equality family {eq_worst:.2e}",
    )


def test_criterion_08_large_radius_inequality():
    lams = (0.25, 0.5, 1.0)
    rhos = (SQRT7, 3.0, 5.0)
    worst = math.inf
    assembly_worst = 0.0
    for j in range(200):
        lam = lams[j % 3]
        rho = rhos[(j // 3) % 3]
        h = random_harmonic(42 + j, degree=8)
        value, terms = prop52_terms(h, lam, rho)
        scale = 1 + max(abs(t) for t in terms)
        worst = min(worst, value / scale)
        assembly_worst = max(assembly_worst, qform_assembly_check(h, lam, rho) / scale)
    eq_worst = 0.0
    for lam in lams:
        for rho in rhos:
            h = AnnularHarmonic.from_terms(pairs={1: (1.0, lam)})
            value, _ = prop52_terms(h, lam, rho)
            eq_worst = max(eq_worst, abs(value))
    ok = worst >= -1e-8 and assembly_worst <= 1e-10 and eq_worst <= 1e-10
    report(
        "C08 large-radius inequality",
        ok,
        f"200 samples, worst rel value {worst:.2e}, "
        f"assembly {assembly_worst:.2e}, equality {eq_worst:.2e}",
    )


def test_criterion_09_jacobian_energy():
    worst = math.inf
    for j in range(50):
        gap = jacobian_energy_gap(disk_extension(random_circle_homeo(42 + j)))
        worst = min(worst, gap)
    iso_worst = 0.0
    for alpha in (0.0, 1.1, -2.3):
        rot = FourierSeries.from_coeffs({1: np.exp(1j * alpha)})
        iso_worst = max(iso_worst, abs(jacobian_energy_gap(disk_extension(rot))))
    ok = worst >= -1e-8 and iso_worst <= 1e-12
    report(
        "C09 Jacobian-Energy",
        ok,
        f"50 homeomorphisms, min gap {worst:.2e}, isometry gap {iso_worst:.2e}",
    )


def test_criterion_10_bound_chain():
    Ks = np.linspace(1.0, 10.0, 100)
    ts = np.linspace(1.0 + 1e-6, 10.0, 100)
    worst = math.inf
    for K in Ks:
        for t in ts:
            g1, g2 = bound_chain_check(float(t), float(K))
            worst = min(worst, g1, g2)
    report("C10 bound chain", worst >= -1e-12, f"min gap {worst:.2e} on 100x100 grid")


def test_criterion_11_graph_bound_equality():
    worst = 0.0
    for K in (1.5, 2.0, 5.0):
        for R in (1.5, 2.0, 4.0):
            sigma = bound(BoundRequest("th34", t=R, K=K)).value
            value = bound(BoundRequest("graph", sigma=sigma, K=K)).value
            worst = max(worst, abs(value - math.log(R)))
    report("C11 graph bound equality", worst <= 1e-10, f"max |gap| {worst:.2e}")


def test_criterion_12_parseval_oracles():
    worst = 0.0
    for j in range(100):
        h = random_harmonic(42 + j, degree=32, with_log=True)
        m = 4 * h.degree + 4
        for rho in (0.5, 1.0, 2.0, 5.0):
            closed = h.mean_sq(rho)
            quad = quadrature_mean(lambda z: np.abs(h.eval(z)) ** 2, rho, m).real
            worst = max(worst, abs(closed - quad) / (1 + closed))
    report("C12 Parseval oracles", worst <= 1e-11, f"worst rel gap {worst:.2e}")
