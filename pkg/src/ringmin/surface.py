"""Minimal surfaces F = (h, w) in isothermal coordinates over an annulus.

The complex coordinate h and real coordinate w are annular harmonics coupled
by the conformality relation

    h_z * conj(h_zbar) + w_z^2 == 0.

Everything geometric lives here: the Gauss map, quasiconformal distortion,
the period obstruction for the height function, the spectral height lift,
modulus, area, circle-image radii and mesh export.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CriticalPointError,
    MoveContourError,
    OrientationError,
    PeriodError,
)
from .series import (
    DEFAULT_RTOL,
    AnnularHarmonic,
    Annulus,
    continuous_sqrt,
    default_grid_size,
    radial_nodes,
    theta_grid,
)


@dataclass(frozen=True)
class GaussVector:
    """Unit normal (xi, tau) in C x R."""

    xi: complex
    tau: float

    def __post_init__(self):
        if abs(abs(self.xi) ** 2 + self.tau**2 - 1.0) > 1e-12:
            raise ValueError(
                f"not a unit vector: |xi|^2 + tau^2 = "
                f"{abs(self.xi) ** 2 + self.tau ** 2:.15f}"
            )

    @classmethod
    def normalized(cls, xi: complex, tau: float) -> GaussVector:
        norm = math.sqrt(abs(xi) ** 2 + tau * tau)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(xi / norm, tau / norm)


@dataclass(frozen=True)
class MinimalSurface:
    """Isothermal pair (h, w) with a validity annulus.

    `w_kind` is "harmonic" for a genuine annular-harmonic height, or
    "slit_arg" for the multivalued height w = w_sign * arg z stored on the
    plane slit along the positive real axis (the helicoid case); then
    `recorded_defect` keeps the height period measured around the annulus.
    """

    h: AnnularHarmonic
    w: AnnularHarmonic
    annulus: Annulus
    tol: float = DEFAULT_RTOL
    w_kind: str = "harmonic"
    w_sign: int = 1
    recorded_defect: float = 0.0

    def __post_init__(self):
        if self.w_kind not in ("harmonic", "slit_arg"):
            raise ValueError(f"unknown w_kind {self.w_kind!r}")
        if self.w_kind == "harmonic" and not self.w.is_real(1e-10):
            raise ValueError("height coordinate fails the realness predicate")

    # -- height evaluation dispatch ------------------------------------------

    def w_values(self, z):
        if self.w_kind == "slit_arg":
            ang = np.mod(np.angle(np.asarray(z, dtype=complex)), 2.0 * np.pi)
            return self.w_sign * ang
        return np.real(self.w.eval(z))

    def w_wirtinger(self, z):
        """w_z; for the slit branch of arg z this is -i sign / (2 z)."""
        if self.w_kind == "slit_arg":
            z = np.asarray(z, dtype=complex)
            return -0.5j * self.w_sign / z
        wz, _ = self.w.wirtinger(z)
        return wz

    def points(self, z):
        """Surface points (u, v, w) for parameter values z."""
        hv = self.h.eval(z)
        wv = self.w_values(z)
        return np.stack(
            [np.real(hv), np.imag(hv), np.broadcast_to(wv, np.shape(hv))], axis=-1
        )

    @property
    def modulus(self) -> float:
        return self.annulus.modulus


# -- conformality -------------------------------------------------------------


def conformality_residual(surface: MinimalSurface, z) -> np.ndarray:
    """|h_z conj(h_zbar) + w_z^2| at the given parameter values."""
    hz, hzb = surface.h.wirtinger(z)
    wz = surface.w_wirtinger(z)
    return np.abs(hz * np.conj(hzb) + wz * wz)


def conformality_report(
    surface: MinimalSurface, n_rho: int = 24, n_theta: int = 0
) -> tuple[float, float]:
    """(max residual, scale) over a validation grid inside the annulus.

    The scale is the grid maximum of (|h_z| + |h_zbar|)^2, the natural square
    of the operator norm that the residual should be compared against.
    """
    n_theta = n_theta or default_grid_size(surface.h.degree)
    rhos = surface.annulus.radial_grid(n_rho, pad=1e-9)
    z = rhos[:, None] * np.exp(1j * theta_grid(n_theta))[None, :]
    hz, hzb = surface.h.wirtinger(z)
    wz = surface.w_wirtinger(z)
    resid = np.abs(hz * np.conj(hzb) + wz * wz)
    scale = float(np.max((np.abs(hz) + np.abs(hzb)) ** 2))
    return float(np.max(resid)), scale


# -- Gauss map ----------------------------------------------------------------


def gauss_map(surface: MinimalSurface, z) -> GaussVector:
    """Unit normal F_x x F_y / |F_x x F_y| at a regular point.

    In Wirtinger form the unnormalized normal is
    (2 (w_z h_zbar - conj(w_z) h_z), |h_z|^2 - |h_zbar|^2).
    """
    hz, hzb = surface.h.wirtinger(z)
    wz = surface.w_wirtinger(z)
    scale = surface.h.magnitude() + 1.0
    if abs(hz) + abs(hzb) < 1e-13 * scale:
        raise CriticalPointError(f"critical point of the parametrization at z={z}")
    xi = 2.0 * (wz * hzb - np.conj(wz) * hz)
    tau = abs(hz) ** 2 - abs(hzb) ** 2
    return GaussVector.normalized(complex(xi), float(tau))


def gauss_from_sqrt_nu(sqrt_nu: complex) -> GaussVector:
    """Normal from a square root s of the second Beltrami coefficient:

    N = (2 i s / (1 + |s|^2), (1 - |s|^2) / (1 + |s|^2)).
    """
    s2 = abs(sqrt_nu) ** 2
    return GaussVector(2j * sqrt_nu / (1.0 + s2), (1.0 - s2) / (1.0 + s2))


def gauss_map_from_height(h: AnnularHarmonic, wz: complex, z) -> GaussVector:
    """Normal through the Beltrami route, with the branch fixed by w_z = i*lam*h_z."""
    hz, _ = h.wirtinger(z)
    if hz == 0:
        raise CriticalPointError(f"h_z = 0 at z={z}; use the cross-product route")
    lam = -1j * wz / hz
    lam_bar = np.conj(lam)
    denom = 1.0 + abs(lam) ** 2
    return GaussVector.normalized(2j * lam_bar / denom, (1.0 - abs(lam) ** 2) / denom)


# -- distortion ---------------------------------------------------------------


def distortion(h: AnnularHarmonic, z) -> float:
    """K_h = (|h_z| + |h_zbar|) / (|h_z| - |h_zbar|); needs a positive Jacobian."""
    hz, hzb = h.wirtinger(z)
    num, den = abs(hz) + abs(hzb), abs(hz) - abs(hzb)
    if den <= 0:
        raise OrientationError(f"nonpositive Jacobian at z={z}")
    return float(num / den)


def beltrami_mu(h: AnnularHarmonic, z) -> complex:
    """First Beltrami coefficient mu = h_zbar / h_z."""
    hz, hzb = h.wirtinger(z)
    return complex(hzb / hz)


def beltrami_nu(h: AnnularHarmonic, z) -> complex:
    """Second Beltrami coefficient nu = h_zbar / conj(h_z)."""
    hz, hzb = h.wirtinger(z)
    return complex(hzb / np.conj(hz))


# -- height lift --------------------------------------------------------------


def _sqrt_phi_samples(h: AnnularHarmonic, rho: float, m: int):
    """Branch-tracked samples of sqrt(h_z conj(h_zbar)) on |z| = rho.

    When phi is pure floating dust relative to the gradient scale (h
    holomorphic or antiholomorphic up to rounding) the height is constant;
    the roots are zeroed instead of amplifying noise through the sqrt.
    """
    z = rho * np.exp(1j * theta_grid(m))
    hz, hzb = h.wirtinger(z)
    phi = hz * np.conj(hzb)
    scale = float(np.max(np.abs(phi)))
    grad_scale = float(np.max((np.abs(hz) + np.abs(hzb)) ** 2))
    if scale <= 1e-14 * (grad_scale + 1e-300):
        return z, np.zeros_like(phi)
    if float(np.min(np.abs(phi))) < 1e-12 * scale:
        raise MoveContourError(
            f"h_z conj(h_zbar) vanishes on |z| = {rho}; move the contour"
        )
    roots, closed = continuous_sqrt(phi)
    if not closed:
        raise PeriodError(
            math.nan,
            f"square-root branch does not close on |z| = {rho}: "
            "odd-order zero enclosed, no single-valued height",
        )
    return z, roots


def period_defect(h: AnnularHarmonic, rho: float, m: int = 0) -> float:
    """Period of the height function around the circle |z| = rho.

    Computed as 2 Im oint sqrt(h_z conj(h_zbar)) dz with a continuously
    tracked branch.  Since the integrand is holomorphic for harmonic h, one
    circle decides the obstruction for the whole annulus.  Vanishing defect
    is exactly single-valuedness of the height lift; the identically
    degenerate case (holomorphic or antiholomorphic h) returns 0.
    """
    m = m or default_grid_size(max(h.degree, 1)) * 2
    z, roots = _sqrt_phi_samples(h, rho, m)
    integral = np.mean(roots * 1j * z) * 2.0 * np.pi  # dz = i z dtheta
    return float(2.0 * integral.imag)


def lift_w(
    h: AnnularHarmonic,
    basepoint: complex = 1.0 + 0.0j,
    sign: int = 1,
    tol: float = 1e-9,
    m: int = 0,
) -> AnnularHarmonic:
    """Height function w with dw = sign * 2 Im(sqrt(h_z conj(h_zbar)) dz).

    Equivalently w_z = -i * sign * sqrt(phi), phi = h_z conj(h_zbar).  The
    holomorphic sqrt(phi) is expanded in a Laurent series on the basepoint
    circle and integrated mode by mode, which reproduces closed-form heights
    exactly; w(basepoint) = 0.  The branch takes a nonnegative real part at
    theta = 0 on the basepoint circle, ties toward +i; `sign` reflects the
    surface.  Raises PeriodError when the height period exceeds `tol`.
    """
    rho0 = abs(complex(basepoint))
    if rho0 <= 0:
        raise ValueError("basepoint must be nonzero")
    m = m or default_grid_size(max(h.degree, 1)) * 2
    z, roots = _sqrt_phi_samples(h, rho0, m)
    scale = float(np.max(np.abs(roots)))
    if scale == 0.0:
        return AnnularHarmonic.zero()  # flat case: w constant, normalized to 0
    defect = float(2.0 * (np.mean(roots * 1j * z) * 2.0 * np.pi).imag)
    if abs(defect) > tol * (1.0 + 2.0 * np.pi * rho0 * scale):
        raise PeriodError(defect)

    # Laurent coefficients of sqrt(phi) on the basepoint circle
    spec = np.fft.fft(roots) / m
    nmax = (m - 1) // 2
    gamma = {}
    for k in range(-nmax, nmax + 1):
        g = spec[k % m] * rho0 ** (-k)
        if abs(g) > 1e-14 * scale:
            gamma[k] = complex(g)

    # w_z = -i sign sqrt(phi) = c/(2z) + sum m a_m z^{m-1}
    c = -2j * sign * gamma.get(-1, 0.0)
    c = complex(c.real, 0.0)  # residue is real-imaginary-clean once defect ~ 0
    pairs = {}
    for k, g in gamma.items():
        n = k + 1
        if n == 0:
            continue
        a = -1j * sign * g / n
        pairs[n] = (a, 0.0)
    # realness: b_{-n} = conj(a_n)
    for n, (a, _) in list(pairs.items()):
        am, _ = pairs.get(-n, (0.0, 0.0))
        pairs[-n] = (am, np.conj(a))
    w = AnnularHarmonic.from_terms(c, 0.0, pairs)
    w = AnnularHarmonic.from_terms(
        w.log_coeff, -w.eval(complex(basepoint)), w.pairs
    )
    return w


def lift_w_path(h: AnnularHarmonic, basepoint: complex, z, sign: int = 1,
                steps: int = 2048) -> float:
    """Quadrature oracle for the height: integrate along radius then arc.

    Composite trapezoid over a radial segment from the basepoint circle and a
    circular arc to z, with branch continuation chained through both legs.
    Independent of the spectral route in `lift_w`.
    """
    z = complex(z)
    z0 = complex(basepoint)
    rho0, rho1 = abs(z0), abs(z)
    th0, th1 = np.angle(z0), np.angle(z)

    def phi_at(points):
        hz, hzb = h.wirtinger(points)
        return hz * np.conj(hzb)

    # leg 1: radial from z0 to rho1 * e^{i th0}
    t = np.linspace(rho0, rho1, steps)
    pts1 = t * np.exp(1j * th0)
    # leg 2: arc at radius rho1 from th0 to th1 (short way)
    dth = (th1 - th0 + np.pi) % (2.0 * np.pi) - np.pi
    ang = th0 + np.linspace(0.0, dth, steps)
    pts2 = rho1 * np.exp(1j * ang)
    pts = np.concatenate([pts1, pts2])
    phi = phi_at(pts)
    roots, _ = continuous_sqrt(phi)
    # align the starting branch with the spectral convention (principal at z0)
    start = np.sqrt(phi[0])
    if abs(roots[0] - start) > abs(roots[0] + start):
        roots = -roots
    integral = np.trapezoid(roots, pts)
    return float(sign * 2.0 * integral.imag)


# -- global quantities ----------------------------------------------------------


def modulus(surface: MinimalSurface) -> float:
    return surface.annulus.modulus


def area(surface: MinimalSurface, n_rho: int = 0, n_theta: int = 0) -> float:
    """Surface area: integral of (|h_z| + |h_zbar|)^2 over the annulus.

    Tensor quadrature, Gauss-Legendre radially (64 nodes per modulus decade)
    and trapezoid in the angle.
    """
    ann = surface.annulus
    decades = max(1.0, ann.modulus / math.log(10.0))
    n_rho = n_rho or max(64, int(64 * decades))
    n_theta = n_theta or default_grid_size(surface.h.degree)
    rho, wts = radial_nodes(ann.r, ann.R, n_rho)
    z = rho[:, None] * np.exp(1j * theta_grid(n_theta))[None, :]
    hz, hzb = surface.h.wirtinger(z)
    ring_means = np.mean((np.abs(hz) + np.abs(hzb)) ** 2, axis=1)
    return float(2.0 * np.pi * np.sum(wts * rho * ring_means))


def image_radii(h: AnnularHarmonic, rho: float, m: int = 0) -> tuple[float, float, float]:
    """(min, max, rms) of |h| over the circle |z| = rho; rms via Parseval."""
    m = m or default_grid_size(h.degree)
    vals = np.abs(h.eval(rho * np.exp(1j * theta_grid(m))))
    return float(np.min(vals)), float(np.max(vals)), math.sqrt(h.mean_sq(rho))


# -- meshes ---------------------------------------------------------------------


@dataclass(frozen=True)
class Mesh:
    """Triangulated image of the parameter grid; faces wrap in the angle."""

    vertices: np.ndarray  # (K, 3) floats
    faces: np.ndarray  # (F, 3) int vertex indices, consistently oriented
    shape: tuple[int, int]  # (n_rho, n_theta)

    def __post_init__(self):
        if self.faces.size and (
            self.faces.min() < 0 or self.faces.max() >= len(self.vertices)
        ):
            raise ValueError("face index out of range")


def build_mesh(surface: MinimalSurface, n_rho: int, n_theta: int) -> Mesh:
    """Vertices on a geometric rho-grid x uniform theta-grid, quads split in two."""
    if n_rho < 2 or n_theta < 3:
        raise ValueError("need n_rho >= 2 and n_theta >= 3")
    rhos = surface.annulus.radial_grid(n_rho)
    z = rhos[:, None] * np.exp(1j * theta_grid(n_theta))[None, :]
    pts = surface.points(z).reshape(-1, 3)
    faces = []
    for i in range(n_rho - 1):
        for j in range(n_theta):
            jn = (j + 1) % n_theta
            v00 = i * n_theta + j
            v01 = i * n_theta + jn
            v10 = (i + 1) * n_theta + j
            v11 = (i + 1) * n_theta + jn
            faces.append((v00, v01, v11))
            faces.append((v00, v11, v10))
    return Mesh(pts, np.asarray(faces, dtype=int), (n_rho, n_theta))


def write_obj(mesh: Mesh, path) -> None:
    """Wavefront OBJ: 'v u v w' with 9 significant digits, 1-indexed faces."""
    lines = []
    for u, v, w in mesh.vertices:
        lines.append(f"v {u:.9g} {v:.9g} {w:.9g}")
    for i, j, k in mesh.faces:
        lines.append(f"f {i + 1} {j + 1} {k + 1}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_radius_profile(h: AnnularHarmonic, rhos, path) -> None:
    """CSV profile of circle-image radii with header rho,min,max,rms."""
    rows = ["rho,min,max,rms"]
    for rho in rhos:
        rho = float(rho)
        lo, hi, rms = image_radii(h, rho)
        rows.append(f"{rho!r},{lo!r},{hi!r},{rms!r}")
    with open(path, "w") as fh:
        fh.write("\n".join(rows) + "\n")
