"""Numerical verification of the integral inequalities behind the sharp bounds.

Three layers:

* two integral inequalities for annular harmonics (`prop51` for moderate
  outer radii, `prop52_terms` for large ones), each evaluated through the
  Parseval closed forms with trapezoid/Gauss-Legendre quadrature as the
  independent oracle;
* the quadratic forms Q_n(a_n, b_n) whose termwise positivity proves the
  large-radius inequality (`qform_coeffs`, `positive_definite_sweep`,
  `qform_assembly_check` which pins the normalization);
* the Jacobian-Energy inequality for harmonic self-homeomorphisms of the
  disk, boundary Jacobian integral against Dirichlet energy.

Normalization convention used throughout: circle integrals are averages and
disk integrals carry 1/(2 pi), so that for a disk harmonic f with boundary
modes p_n the Jacobian-Energy bracket reads

    [J_f mean on T] - [energy mean on D] = sum |n| (n - 1) |p_n|^2.

Randomized suites are seeded and deterministic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bjorling import extend_harmonic, neumann_from_beltrami
from .errors import OrientationError
from .series import (
    AnnularHarmonic,
    FourierSeries,
    analyze,
    default_grid_size,
    disk_extension,
    quadrature_mean,
    radial_nodes,
    theta_grid,
    winding_number,
)

SQRT7 = math.sqrt(7.0)


# -- boundary behaviour ----------------------------------------------------------


def boundary_checks(h: AnnularHarmonic, m: int = 0) -> tuple[float, float, float]:
    """(sup K, speed margin, winding mean) on the unit circle.

    For an orientation-preserving boundary homeomorphism of the circle the
    radial speed obeys |h|_rho >= |h_theta| / sup K pointwise, and the
    winding mean of Im(conj(h) h_theta) equals 1.
    """
    m = m or default_grid_size(h.degree)
    z = np.exp(1j * theta_grid(m))
    hz, hzb = h.wirtinger(z)
    jac = np.abs(hz) ** 2 - np.abs(hzb) ** 2
    if float(np.min(jac)) <= 0.0:
        raise OrientationError("nonpositive Jacobian on the unit circle")
    kvals = (np.abs(hz) + np.abs(hzb)) / (np.abs(hz) - np.abs(hzb))
    sup_k = float(np.max(kvals))
    hv = h.eval(z)
    _, _, hrho, htheta = h.derivatives(z)
    speed = (np.conj(hv) * hrho).real / np.abs(hv)
    margin = float(np.min(speed - np.abs(htheta) / sup_k))
    _, winding_mean, _ = h.mean_bilinears(1.0)
    return sup_k, margin, winding_mean


# -- moderate-radius integral inequality ------------------------------------------


def prop51(
    h: AnnularHarmonic,
    lam: float,
    R: float,
    n_rho: int = 96,
    n_theta: int = 0,
) -> tuple[float, float, float]:
    """Weighted integral-means inequality on the annulus 1 < |z| < R.

    Requires lam > -1 and 1 < R <= 1 + sqrt(3 + 3 lam).  Returns
    (lhs, rhs, gap) where

        lhs = 2R^2/(R^2+lam) U(R) - 2(lam R^2+1)/(1+lam)^2 U(1)
              - 2(R^2-1)/(1+lam) mean(|h| |h|_rho)
              - 2(R-1)^2 (2R+3lam+1)/(3(1+lam)^2) mean Im[conj(h)(h_theta - i h)]

        rhs = (1/pi) iint_A  (R-rho)^2 (2R rho + rho^2 + 3 lam)/(3 rho^2)
              * | (rho h_rho - i h_theta)/(rho^2+lam) - 2 rho^2 h/(rho^2+lam)^2 |^2

    and gap = lhs - rhs >= 0, with equality exactly on h = c (z + lam/zbar).
    The circle means on the left are Parseval closed forms; the right side is
    tensor quadrature (Gauss-Legendre radially, trapezoid in the angle), an
    independent route.
    """
    if not lam > -1.0:
        raise ValueError(f"lam must be > -1, got {lam}")
    rcap = 1.0 + math.sqrt(3.0 + 3.0 * lam)
    if not 1.0 < R <= rcap + 1e-12:
        raise ValueError(f"R must lie in (1, {rcap:.6f}], got {R}")

    u_R = h.mean_sq(R)
    u_1 = h.mean_sq(1.0)
    udot_1, winding_1, _ = h.mean_bilinears(1.0)
    lhs = (
        2.0 * R * R / (R * R + lam) * u_R
        - 2.0 * (lam * R * R + 1.0) / (1.0 + lam) ** 2 * u_1
        - (R * R - 1.0) / (1.0 + lam) * udot_1
        - 2.0 * (R - 1.0) ** 2 * (2.0 * R + 3.0 * lam + 1.0)
        / (3.0 * (1.0 + lam) ** 2)
        * (winding_1 - u_1)
    )

    n_theta = n_theta or max(64, 4 * h.degree + 4)
    rho, wts = radial_nodes(1.0, R, n_rho)
    z = rho[:, None] * np.exp(1j * theta_grid(n_theta))[None, :]
    hz, _ = h.wirtinger(z)
    hv = h.eval(z)
    rho2 = rho[:, None] ** 2
    # rho h_rho - i h_theta = 2 z h_z for any annular harmonic
    field_vals = 2.0 * z * hz / (rho2 + lam) - 2.0 * rho2 * hv / (rho2 + lam) ** 2
    weight = (R - rho) ** 2 * (2.0 * R * rho + rho**2 + 3.0 * lam) / (3.0 * rho**2)
    ring = np.mean(np.abs(field_vals) ** 2, axis=1)
    rhs = float(2.0 * np.sum(wts * rho * weight * ring))
    return float(lhs), rhs, float(lhs - rhs)


# -- large-radius inequality and its quadratic forms -------------------------------


def _check_prop52_domain(lam: float, rho: float) -> None:
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"lam must lie in (0, 1], got {lam}")
    if rho < SQRT7 - 1e-12:
        raise ValueError(f"rho must be >= sqrt(7), got {rho}")


def jacobian_energy_terms(p: FourierSeries) -> tuple[float, float]:
    """(mean of J_f over T, mean Dirichlet energy over D) for the disk
    extension f of the boundary trace p, via the Parseval forms

        J_f mean = sum n |n| |p_n|^2,   energy mean = sum |n| |p_n|^2.
    """
    jf = sum(n * abs(n) * abs(c) ** 2 for n, c in p.coeffs.items() if n != 0)
    en = sum(abs(n) * abs(c) ** 2 for n, c in p.coeffs.items() if n != 0)
    return float(jf), float(en)


def prop52_terms(
    h: AnnularHarmonic, lam: float, rho: float
) -> tuple[float, tuple[float, float, float, float, float]]:
    """Five-term large-radius inequality, evaluated from coefficients.

    For sqrt(7) <= rho and 0 < lam <= 1,

        T1 = mean |h|^2 on T_rho
        T2 = -((rho^2+lam)/((1+lam) rho))^2 * winding mean on T
        T3 = -2 [ mean(|h||h|_rho) - (1-lam)/(1+lam) * winding mean ] on T
        T4 = -(S/(lam(1+lam))) * mean(lam^2 |h_z|^2 - |h_zbar|^2) on T
        T5 = -(S/(1+lam)) * [J_f mean on T - energy mean on D]

    with S = rho^2 - (3+lam) - lam rho^{-2} and f the disk extension of the
    trace of h on T.  Returns (sum, (T1..T5)); the sum is nonnegative with
    equality exactly on h = c (z + lam/zbar).
    """
    _check_prop52_domain(lam, rho)
    S = rho * rho - (3.0 + lam) - lam / (rho * rho)

    t1 = h.mean_sq(rho)
    udot, winding, _ = h.mean_bilinears(1.0)
    t2 = -(((rho * rho + lam) / ((1.0 + lam) * rho)) ** 2) * winding
    t3 = -udot + 2.0 * (1.0 - lam) / (1.0 + lam) * winding
    mz, mzb = h.gradient_means(1.0)
    t4 = -(S / (lam * (1.0 + lam))) * (lam * lam * mz - mzb)
    jf, en = jacobian_energy_terms(h.restrict(1.0))
    t5 = -(S / (1.0 + lam)) * (jf - en)
    terms = (float(t1), float(t2), float(t3), float(t4), float(t5))
    return float(sum(terms)), terms


def prop52_terms_quadrature(
    h: AnnularHarmonic, lam: float, rho: float, m: int = 0, n_disk: int = 64
) -> tuple[float, tuple[float, float, float, float, float]]:
    """Quadrature oracle for `prop52_terms`: every mean by trapezoid sums,
    the disk energy by Gauss-Legendre x trapezoid tensor quadrature."""
    _check_prop52_domain(lam, rho)
    m = m or default_grid_size(h.degree)
    S = rho * rho - (3.0 + lam) - lam / (rho * rho)
    zin = np.exp(1j * theta_grid(m))

    t1 = quadrature_mean(lambda z: np.abs(h.eval(z)) ** 2, rho, m).real

    hv = h.eval(zin)
    hz, hzb, hrho, htheta = h.derivatives(zin)
    winding = float(np.mean((np.conj(hv) * htheta).imag))
    t2 = -(((rho * rho + lam) / ((1.0 + lam) * rho)) ** 2) * winding
    t3 = -2.0 * float(
        np.mean((np.conj(hv) * hrho).real - (1.0 - lam) / (1.0 + lam)
                * (np.conj(hv) * htheta).imag)
    )
    t4 = -(S / (lam * (1.0 + lam))) * float(
        np.mean(lam * lam * np.abs(hz) ** 2 - np.abs(hzb) ** 2)
    )

    f = disk_extension(h.restrict(1.0))
    fz, fzb = f.wirtinger(zin)
    jf = float(np.mean(np.abs(fz) ** 2 - np.abs(fzb) ** 2))
    radii, wts = radial_nodes(1e-9, 1.0, n_disk)
    zd = radii[:, None] * zin[None, :]
    fz, fzb = f.wirtinger(zd)
    dens = 2.0 * (np.abs(fz) ** 2 + np.abs(fzb) ** 2)
    energy = float(np.sum(wts * radii * np.mean(dens, axis=1)))  # (1/2pi) iint
    t5 = -(S / (1.0 + lam)) * (jf - energy)
    terms = (t1, t2, t3, t4, t5)
    return float(sum(terms)), terms


@dataclass(frozen=True)
class QFormCoeffs:
    """Coefficients of the mode-n quadratic form Q_n(xi, zeta) =
    A |xi|^2 + B |zeta|^2 + 2 C Re(xi conj(zeta))."""

    n: int
    rho: float
    lam: float
    A: float
    B: float
    C: float

    @property
    def discriminant(self) -> float:
        return self.A * self.B - self.C * self.C

    @property
    def in_definiteness_region(self) -> bool:
        """Whether (rho, lam) sits where positive definiteness is proved:
        rho^2 >= 7 and 0 < lam <= 1 (rho > sqrt(e) for mode 0).  Evaluation
        outside the region is allowed but carries no positivity claim."""
        if self.n == 0:
            return self.rho > math.exp(0.5)
        return self.rho >= SQRT7 - 1e-12 and 0.0 < self.lam <= 1.0

    def q(self, xi: complex, zeta: complex) -> float:
        return float(
            self.A * abs(xi) ** 2
            + self.B * abs(zeta) ** 2
            + 2.0 * self.C * (xi * np.conj(zeta)).real
        )


def qform_coeffs(n: int, rho: float, lam: float) -> QFormCoeffs:
    """Quadratic form acting on the mode-n coefficient pair (a_n, b_n).

    For n != 0, with M = (rho + lam/rho)^2/(1+lam)^2 - 2(1-lam)/(1+lam) and
    S = rho^2 - (3+lam) - lam rho^{-2}:

        A_n = rho^{2n}  - M n - 2n - (S/(lam(1+lam))) (n^2 lam^2 + lam |n|(n-1))
        B_n = rho^{-2n} - M n + 2n - (S/(lam(1+lam))) (-n^2     + lam |n|(n-1))
        C_n = 1 - M n - (S/(1+lam)) |n| (n-1)

    Mode 0 acts on (log coefficient, constant):
    Q_0 = |xi log rho + zeta|^2 - 2 Re(xi conj(zeta)), positive definite for
    rho > sqrt(e).  Mode 1 is positive semidefinite with discriminant 0.
    Positive definiteness of the remaining modes requires rho^2 >= 7 and
    0 < lam <= 1; evaluation itself is unrestricted.
    """
    if n == 0:
        lr = math.log(rho)
        return QFormCoeffs(0, rho, lam, lr * lr, 1.0, lr - 1.0)
    M = (rho + lam / rho) ** 2 / (1.0 + lam) ** 2 - 2.0 * (1.0 - lam) / (1.0 + lam)
    S = rho * rho - (3.0 + lam) - lam / (rho * rho)
    an = abs(n)
    A = rho ** (2 * n) - M * n - 2.0 * n - (S / (lam * (1.0 + lam))) * (
        n * n * lam * lam + lam * an * (n - 1)
    )
    B = rho ** (-2 * n) - M * n + 2.0 * n - (S / (lam * (1.0 + lam))) * (
        -n * n + lam * an * (n - 1)
    )
    C = 1.0 - M * n - (S / (1.0 + lam)) * an * (n - 1)
    return QFormCoeffs(n, rho, lam, float(A), float(B), float(C))


def qform_assembly(h: AnnularHarmonic, lam: float, rho: float) -> float:
    """sum_n Q_n(a_n, b_n), including the mode-0 form on (log coeff, constant).

    Valid assembly of the five-term inequality needs a log-free h (the mode-0
    display drops the gradient energy that a log term would contribute)."""
    if abs(h.log_coeff) > 1e-12 * (h.magnitude() + 1e-300):
        raise ValueError("quadratic-form assembly requires a log-free harmonic")
    total = qform_coeffs(0, rho, lam).q(h.log_coeff, h.constant)
    for n, (a, b) in h.pairs.items():
        total += qform_coeffs(n, rho, lam).q(a, b)
    return float(total)


def qform_assembly_check(h: AnnularHarmonic, lam: float, rho: float) -> float:
    """|five-term value - sum_n Q_n|; pins the normalization convention."""
    value, _ = prop52_terms(h, lam, rho)
    return abs(value - qform_assembly(h, lam, rho))


# -- reports and sweeps ------------------------------------------------------------


@dataclass
class VerifyReport:
    """Outcome of one verification suite run."""

    suite: str
    seed: int
    samples: int
    min_margin: float
    arg_lambda: Optional[float] = None
    arg_rho: Optional[float] = None
    arg_n: Optional[int] = None
    passed: bool = False

    CSV_HEADER = "suite,seed,samples,min_margin,arg_lambda,arg_rho,arg_n,pass"

    def csv_row(self) -> str:
        def fmt(v):
            return "" if v is None else repr(v)

        return ",".join(
            [
                self.suite,
                str(self.seed),
                str(self.samples),
                repr(self.min_margin),
                fmt(self.arg_lambda),
                fmt(self.arg_rho),
                fmt(self.arg_n),
                "1" if self.passed else "0",
            ]
        )


def write_report_csv(reports: Sequence[VerifyReport], path) -> None:
    lines = [VerifyReport.CSV_HEADER] + [r.csv_row() for r in reports]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def positive_definite_sweep(
    lam_grid=None, rho_grid=None, nmax: int = 64
) -> VerifyReport:
    """Scan A_n > 0, B_n > 0, A_n B_n > C_n^2 over the definiteness region.

    Modes n in {-nmax..-1} u {2..nmax}; mode 1 is excluded (semidefinite) and
    checked separately by callers.  Defaults: lam in {0.05..1.00, step 0.05},
    50 log-spaced rho in [sqrt(7), 20].
    """
    if lam_grid is None:
        lam_grid = np.arange(1, 21) * 0.05
    if rho_grid is None:
        rho_grid = np.exp(np.linspace(math.log(SQRT7), math.log(20.0), 50))
    lam_grid = np.asarray(lam_grid, dtype=float)
    rho_grid = np.asarray(rho_grid, dtype=float)
    ns = np.array([n for n in range(-nmax, nmax + 1) if n not in (0, 1)])

    n_ = ns[:, None, None].astype(float)
    an_ = np.abs(n_)
    lam_ = lam_grid[None, :, None]
    rho_ = rho_grid[None, None, :]
    M = (rho_ + lam_ / rho_) ** 2 / (1.0 + lam_) ** 2 - 2.0 * (1.0 - lam_) / (1.0 + lam_)
    S = rho_**2 - (3.0 + lam_) - lam_ / rho_**2
    A = rho_ ** (2 * n_) - M * n_ - 2.0 * n_ - (S / (lam_ * (1.0 + lam_))) * (
        n_**2 * lam_**2 + lam_ * an_ * (n_ - 1.0)
    )
    B = rho_ ** (-2 * n_) - M * n_ + 2.0 * n_ - (S / (lam_ * (1.0 + lam_))) * (
        -(n_**2) + lam_ * an_ * (n_ - 1.0)
    )
    C = 1.0 - M * n_ - (S / (1.0 + lam_)) * an_ * (n_ - 1.0)
    disc = A * B - C * C

    margin = np.minimum(np.minimum(A, B), disc)
    flat = int(np.argmin(margin))
    i, j, k = np.unravel_index(flat, margin.shape)
    return VerifyReport(
        suite="qforms",
        seed=0,
        samples=int(margin.size),
        min_margin=float(margin[i, j, k]),
        arg_lambda=float(lam_grid[j]),
        arg_rho=float(rho_grid[k]),
        arg_n=int(ns[i]),
        passed=bool(np.all(margin > 0.0)),
    )


# -- Jacobian-Energy inequality on the disk ------------------------------------------


def _require_disk_homeo(f: AnnularHarmonic, m: int = 512) -> None:
    """Orientation-preserving harmonic self-homeomorphism of the closed disk:
    unimodular degree-1 boundary trace with increasing argument, J > 0 inside."""
    if abs(f.log_coeff) > 1e-12 * (f.magnitude() + 1e-300):
        raise OrientationError("disk harmonic must not carry a log term")
    z = np.exp(1j * theta_grid(m))
    tr = f.eval(z)
    if float(np.max(np.abs(np.abs(tr) - 1.0))) > 1e-8:
        raise OrientationError("boundary trace does not map T onto T")
    turns = winding_number(tr)
    if abs(turns - 1.0) > 1e-6:
        raise OrientationError(f"boundary trace winds {turns:.4f} times, need 1")
    darg = (np.conj(tr) * f.derivatives(z)[3]).imag
    if float(np.min(darg)) <= 0.0:
        raise OrientationError("boundary trace is not monotone: not a homeomorphism")
    for rho in (0.25, 0.5, 0.75, 0.95):
        hz, hzb = f.wirtinger(rho * z)
        if float(np.min(np.abs(hz) ** 2 - np.abs(hzb) ** 2)) <= 0.0:
            raise OrientationError(f"nonpositive Jacobian inside the disk at rho={rho}")


def jacobian_energy_gap(f: AnnularHarmonic) -> float:
    """oint_T det Df - iint_D |Df|^2 for a validated disk homeomorphism.

    Fourier closed form: 2 pi sum |n| (n - 1) |p_n|^2 over boundary modes p_n.
    Nonnegative, zero exactly for isometries.  The Jacobian enters without
    absolute value because validation guarantees it is positive.
    """
    _require_disk_homeo(f)
    jf, en = jacobian_energy_terms(f.restrict(1.0))
    return float(2.0 * math.pi * (jf - en))


def jacobian_energy_gap_quadrature(
    f: AnnularHarmonic, m: int = 0, n_disk: int = 96
) -> float:
    """Quadrature oracle for `jacobian_energy_gap` (|det| retained here)."""
    m = m or default_grid_size(f.degree)
    zin = np.exp(1j * theta_grid(m))
    fz, fzb = f.wirtinger(zin)
    boundary = 2.0 * math.pi * float(np.mean(np.abs(np.abs(fz) ** 2 - np.abs(fzb) ** 2)))
    radii, wts = radial_nodes(1e-9, 1.0, n_disk)
    zd = radii[:, None] * zin[None, :]
    fz, fzb = f.wirtinger(zd)
    dens = 2.0 * (np.abs(fz) ** 2 + np.abs(fzb) ** 2)
    energy = 2.0 * math.pi * float(np.sum(wts * radii * np.mean(dens, axis=1)))
    return boundary - energy


# -- seeded sample generators ---------------------------------------------------------


def random_harmonic(
    seed: int,
    degree: int = 8,
    scale: float = 1.0,
    decay: float = 0.75,
    with_log: bool = False,
) -> AnnularHarmonic:
    """Deterministic random annular harmonic; coefficients are complex
    Gaussians damped by decay^|n|.  Log and constant terms only on request
    (the quadratic-form assembly is exact only for log-free harmonics)."""
    rng = np.random.default_rng(seed)

    def draw():
        re, im = rng.standard_normal(2)
        return scale * (re + 1j * im) / math.sqrt(2.0)

    log_coeff = 0.0
    constant = 0.0
    if with_log:
        log_coeff = draw()
        constant = draw()
    pairs = {}
    for n in range(-degree, degree + 1):
        if n == 0:
            continue
        damp = decay ** abs(n)
        pairs[n] = (damp * draw(), damp * draw())
    return AnnularHarmonic.from_terms(log_coeff, constant, pairs)


def random_boundary_adapted_harmonic(seed: int, trace: FourierSeries) -> AnnularHarmonic:
    """Annular harmonic whose unit-circle trace is the given circle
    homeomorphism, with a random uniformly elliptic Beltrami coefficient.

    The coefficient is built as the square of a random trace (so its argument
    winds an even number of times) rescaled to sup |nu| = 0.7; the Neumann
    data then comes from the Beltrami equation, which keeps the boundary
    Jacobian positive.
    """
    half = random_harmonic(seed, degree=3, scale=1.0)
    vals = half.restrict(1.0).sample(256) ** 2
    top = float(np.max(np.abs(vals)))
    if top > 0:
        vals *= 0.7 / top
    nu = analyze(vals).prune()
    return extend_harmonic(trace, neumann_from_beltrami(trace, nu))


def random_circle_homeo(seed: int, modes: int = 5, margin: float = 0.1) -> FourierSeries:
    """Boundary trace e^{i Theta(theta)} of a random circle homeomorphism.

    Theta(theta) = theta + sum_{k<=modes} eps_k sin(k theta + phi_k) with the
    amplitudes rescaled so min Theta' >= margin; the harmonic extension of the
    trace is then a homeomorphism of the disk onto itself.  Identity when all
    amplitudes vanish.
    """
    if not 0.0 < margin <= 1.0:
        raise ValueError(f"margin must lie in (0, 1], got {margin}")
    rng = np.random.default_rng(seed)
    eps = rng.standard_normal(modes)
    phases = rng.uniform(0.0, 2.0 * np.pi, modes)
    ks = np.arange(1, modes + 1)
    mass = float(np.sum(ks * np.abs(eps)))
    if mass > 0:
        budget = (1.0 - margin) * rng.uniform(0.3, 1.0)
        eps *= budget / mass
    theta = theta_grid(1024)
    big_theta = theta + sum(
        eps[k - 1] * np.sin(k * theta + phases[k - 1]) for k in ks
    )
    return analyze(np.exp(1j * big_theta)).prune(1e-13)


# -- suite runners ------------------------------------------------------------------


def run_suite(name: str, samples: int = 0, seed: int = 42) -> list[VerifyReport]:
    """Run a named verification suite and return its report rows.

    Suites: boundary, prop51, prop52, qforms, jacobian-energy, all.
    """
    if name == "all":
        out = []
        for sub in ("boundary", "prop51", "prop52", "qforms", "jacobian-energy"):
            out.extend(run_suite(sub, samples, seed))
        return out

    if name == "qforms":
        report = positive_definite_sweep()
        # mode 1 is semidefinite: its discriminant must vanish identically
        worst = 0.0
        for lam in np.arange(1, 21) * 0.05:
            for rho in (SQRT7, 3.0, 5.0, 12.0, 20.0):
                q1 = qform_coeffs(1, float(rho), float(lam))
                rel = abs(q1.discriminant) / max(q1.A * q1.B, abs(q1.C) ** 2, 1e-300)
                worst = max(worst, rel)
        report.passed = bool(report.passed and worst <= 1e-9)
        q0 = qform_coeffs(0, 2.0, 1.0)
        report.passed = bool(report.passed and q0.discriminant > 0.0 and q0.A > 0.0)
        return [report]

    if name == "boundary":
        n = samples or 50
        worst = math.inf
        winding_worst = 0.0
        arg = None
        for j in range(n):
            p = random_circle_homeo(seed + j)
            h = random_boundary_adapted_harmonic(seed + 10_000 + j, p)
            _, speed_margin, winding_mean = boundary_checks(h)
            winding_worst = max(winding_worst, abs(winding_mean - 1.0))
            if speed_margin < worst:
                worst, arg = speed_margin, j
        return [
            VerifyReport(
                suite="boundary",
                seed=seed,
                samples=n,
                min_margin=worst,
                arg_n=arg,
                passed=bool(worst >= -1e-10 and winding_worst <= 1e-12),
            )
        ]

    if name == "prop51":
        n = samples or 200
        lams = (-0.5, 0.0, 0.5, 1.0)
        worst = math.inf
        arg_lam = None
        for j in range(n):
            lam = lams[j % len(lams)]
            R = 1.0 + math.sqrt(3.0 + 3.0 * lam)
            h = random_harmonic(seed + j, degree=8, with_log=True)
            lhs, rhs, gap = prop51(h, lam, R)
            scale = 1.0 + max(abs(lhs), abs(rhs))
            if gap / scale < worst:
                worst, arg_lam = gap / scale, lam
        # equality family: h = c (z + lam/zbar)
        eq_worst = 0.0
        for lam in lams:
            R = 1.0 + math.sqrt(3.0 + 3.0 * lam)
            for c in (1.0, 2.0j):
                h = AnnularHarmonic.from_terms(pairs={1: (c, lam * c)})
                lhs, rhs, _ = prop51(h, lam, R)
                eq_worst = max(eq_worst, abs(lhs) + abs(rhs))
        passed = worst >= -1e-8 and eq_worst <= 1e-10
        return [
            VerifyReport(
                suite="prop51",
                seed=seed,
                samples=n,
                min_margin=float(worst),
                arg_lambda=arg_lam,
                passed=bool(passed),
            )
        ]

    if name == "prop52":
        n = samples or 200
        lams = (0.25, 0.5, 1.0)
        rhos = (SQRT7, 3.0, 5.0)
        worst = math.inf
        assembly_worst = 0.0
        arg = (None, None)
        for j in range(n):
            lam = lams[j % len(lams)]
            rho = rhos[(j // len(lams)) % len(rhos)]
            h = random_harmonic(seed + j, degree=8)
            value, terms = prop52_terms(h, lam, rho)
            scale = 1.0 + max(abs(t) for t in terms)
            if value / scale < worst:
                worst, arg = value / scale, (lam, rho)
            assembly_worst = max(
                assembly_worst, qform_assembly_check(h, lam, rho) / scale
            )
        eq_worst = 0.0
        for lam in lams:
            h = AnnularHarmonic.from_terms(pairs={1: (1.0, lam)})
            value, _ = prop52_terms(h, lam, 3.0)
            eq_worst = max(eq_worst, abs(value))
        passed = worst >= -1e-8 and assembly_worst <= 1e-10 and eq_worst <= 1e-10
        return [
            VerifyReport(
                suite="prop52",
                seed=seed,
                samples=n,
                min_margin=float(worst),
                arg_lambda=arg[0],
                arg_rho=arg[1],
                passed=bool(passed),
            )
        ]

    if name == "jacobian-energy":
        n = samples or 50
        worst = math.inf
        arg = None
        for j in range(n):
            p = random_circle_homeo(seed + j)
            gap = jacobian_energy_gap(disk_extension(p))
            if gap < worst:
                worst, arg = gap, j
        iso_worst = 0.0  # isometries must sit exactly on the equality case
        for alpha in (0.0, 0.7):
            rot = FourierSeries.from_coeffs({1: np.exp(1j * alpha)})
            iso_worst = max(iso_worst, abs(jacobian_energy_gap(disk_extension(rot))))
        return [
            VerifyReport(
                suite="jacobian-energy",
                seed=seed,
                samples=n,
                min_margin=float(worst),
                arg_n=arg,
                passed=bool(worst >= -1e-8 and iso_worst <= 1e-12),
            )
        ]

    raise ValueError(f"unknown verification suite {name!r}")
