"""Closed-form model surfaces and the sharp modulus/distortion bounds.

The principal harmonics

    sharp:   (z + 1/zbar) / 2        (catenoid complex coordinate)
    flat:    (z - 1/zbar) / 2        (helicoid complex coordinate)
    upsilon: ((1+u)/2) z + ((1-u)/2) / zbar, 0 <= u <= 1

evolve the unit circle with initial radial speed 0, 1 and u respectively.
`fixture` returns ready-made minimal surfaces built from them plus the other
workhorse examples used by the verification suites.  `bound` evaluates the
sharp bounds for the modulus/outer-radius of images of annuli under
quasiconformal harmonic maps; the two conjectured bounds are flagged so that
nothing downstream mistakes them for theorems.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .series import AnnularHarmonic, Annulus
from .surface import MinimalSurface


def principal(kind: str, upsilon: float = 1.0) -> AnnularHarmonic:
    """Principal harmonic of the requested kind ('sharp', 'flat', 'upsilon').

    The boundary behaviour on |z| = 1: the sharp map fixes the circle with
    zero radial speed, the flat map collapses it with unit radial speed, and
    the upsilon map is their mix with radial speed upsilon in [0, 1].
    """
    if kind == "sharp":
        return AnnularHarmonic.from_terms(pairs={1: (0.5, 0.5)})
    if kind == "flat":
        return AnnularHarmonic.from_terms(pairs={1: (0.5, -0.5)})
    if kind == "upsilon":
        if not 0.0 <= upsilon <= 1.0:
            raise ValueError(f"upsilon must lie in [0, 1], got {upsilon}")
        return AnnularHarmonic.from_terms(
            pairs={1: (0.5 * (1.0 + upsilon), 0.5 * (1.0 - upsilon))}
        )
    raise ValueError(f"unknown principal harmonic kind {kind!r}")


def _log_height(scale: float, offset: float = 0.0) -> AnnularHarmonic:
    return AnnularHarmonic.from_terms(log_coeff=scale, constant=offset)


def _example32_pair():
    """The folded annulus example: h fixes |z| = 1 pointwise yet loses
    injectivity further out; two genuine critical points sit at z = +-2i."""
    h = AnnularHarmonic.from_terms(
        pairs={
            1: (16.0 / 15.0, -1.0 / 15.0),
            3: (4.0 / 45.0, -4.0 / 45.0),
        }
    )
    # w = (4/15) Im(z - 4/z)
    a1 = -2j / 15.0
    am1 = 8j / 15.0
    w = AnnularHarmonic.from_terms(
        pairs={
            1: (a1, np.conj(am1)),
            -1: (am1, np.conj(a1)),
        }
    )
    return h, w


def _paraboloid_enneper_pair():
    """Surface grown from the rim of the hyperbolic paraboloid w = Re z^2.

    The rim (e^{i theta}, cos 2 theta) with constant-slope normals
    (-2 e^{-i theta}, 1)/sqrt(5) extends to an Enneper-type surface with

        h = ((rho + 1/rho)/2) e^{i th}
            + (3/sqrt5)((rho - 1/rho)/2) e^{i th}
            - (2/sqrt5)((rho^3 - rho^{-3})/6) e^{-3 i th}
        w = ((rho^2 + rho^{-2})/2 + (rho^2 - rho^{-2})/(2 sqrt5)) cos 2 th

    written here directly in Laurent pairs.  The height coefficients are the
    unique ones compatible with w(e^{i th}) = cos 2 th together with
    w_rho = (2/sqrt5) cos 2 th on the rim; they also close the conformality
    relation against h exactly.
    """
    s5 = math.sqrt(5.0)
    a1 = 0.5 * (1.0 + 3.0 / s5)
    b1 = 0.5 * (1.0 - 3.0 / s5)
    am3 = 1.0 / (3.0 * s5)
    bm3 = -1.0 / (3.0 * s5)
    h = AnnularHarmonic.from_terms(pairs={1: (a1, b1), -3: (am3, bm3)})
    alpha = 0.25 + 0.25 / s5
    beta = 0.25 - 0.25 / s5
    w = AnnularHarmonic.from_terms(pairs={2: (alpha, beta), -2: (beta, alpha)})
    return h, w


def fixture(name: str, K: float = 2.0, r: float = 0.5,
            annulus: Optional[Annulus] = None) -> MinimalSurface:
    """Closed-form minimal surface by name.

    Names: catenoid, helicoid, enneper, example32, nitsche_critical,
    catenoidal_slab, paraboloid_enneper, extremal_th34.  All pass the
    conformality check exactly except the helicoid, which is returned with
    its height period (2 pi) recorded and the height stored as the branch of
    arg z on the slit plane.
    """
    if name == "catenoid":
        return MinimalSurface(
            principal("sharp"), _log_height(1.0), annulus or Annulus(1.0, 4.0)
        )
    if name == "helicoid":
        return MinimalSurface(
            principal("flat"),
            AnnularHarmonic.zero(),
            annulus or Annulus(1.0, 4.0),
            w_kind="slit_arg",
            w_sign=1,
            recorded_defect=2.0 * math.pi,
        )
    if name == "enneper":
        h = AnnularHarmonic.from_terms(pairs={-1: (0.0, 1.0), 3: (-1.0 / 3.0, 0.0)})
        w = AnnularHarmonic.from_terms(pairs={2: (0.5, 0.0), -2: (0.0, 0.5)})
        return MinimalSurface(h, w, annulus or Annulus(0.1, 1.0))
    if name == "example32":
        h, w = _example32_pair()
        return MinimalSurface(h, w, annulus or Annulus(0.75, 4.0))
    if name == "nitsche_critical":
        if not 0.0 < r < 1.0:
            raise ValueError(f"inner radius must lie in (0, 1), got {r}")
        h = AnnularHarmonic.from_terms(pairs={1: (0.5 / r, 0.5 * r)})
        return MinimalSurface(
            h, _log_height(1.0, -math.log(r)), annulus or Annulus(r, 1.0)
        )
    if name in ("catenoidal_slab", "extremal_th34"):
        if K < 1.0:
            raise ValueError(f"distortion bound K must be >= 1, got {K}")
        h = principal("upsilon", 1.0 / K)
        scale = math.sqrt(K * K - 1.0) / K
        return MinimalSurface(h, _log_height(scale), annulus or Annulus(1.0, 4.0))
    if name == "paraboloid_enneper":
        h, w = _paraboloid_enneper_pair()
        return MinimalSurface(h, w, annulus or Annulus(0.8, 1.25))
    raise ValueError(f"unknown fixture {name!r}")


FIXTURE_NAMES = (
    "catenoid",
    "helicoid",
    "enneper",
    "example32",
    "nitsche_critical",
    "catenoidal_slab",
    "paraboloid_enneper",
    "extremal_th34",
)


# -- sharp bounds --------------------------------------------------------------


@dataclass(frozen=True)
class BoundRequest:
    """A bound evaluation request; fill the parameters the kind needs.

    t: radii ratio R/r of the source annulus (or the outer radius when r = 1);
    K: distortion bound; sigma: cylinder radius for the graph bound;
    modulus: conformal modulus.
    """

    kind: str
    t: Optional[float] = None
    K: Optional[float] = None
    sigma: Optional[float] = None
    modulus: Optional[float] = None


@dataclass(frozen=True)
class BoundResult:
    """Value of a bound; `interval` replaces `value` for two-sided bounds.

    `conjectured` marks bounds that are not theorems; downstream code must
    never treat them as proved.
    """

    kind: str
    value: Optional[float] = None
    interval: Optional[tuple[float, float]] = None
    conjectured: bool = False


BOUND_KINDS = (
    "nitsche",
    "grotzsch_lower",
    "grotzsch_upper",
    "combined",
    "conjectured_upper",
    "th34",
    "reverse_harnack",
    "graph",
    "conjectured_cosh",
)


def _need(req: BoundRequest, **checks) -> dict:
    vals = {}
    for name, cond in checks.items():
        v = getattr(req, name)
        if v is None:
            raise ValueError(f"bound kind {req.kind!r} needs parameter {name!r}")
        lo, strict = cond
        if (strict and not v > lo) or (not strict and not v >= lo):
            op = ">" if strict else ">="
            raise ValueError(f"parameter {name} must be {op} {lo}, got {v}")
        vals[name] = float(v)
    return vals


def combined_lower_bound(t: float, K: float) -> float:
    """Sharp lower bound for the image radii ratio of a K-quasiconformal
    harmonic homeomorphism between annuli: ((K+1) t + (K-1)/t) / (2K)."""
    return ((K + 1.0) * t + (K - 1.0) / t) / (2.0 * K)


def nitsche_bound(t: float) -> float:
    """Sharp harmonic-homeomorphism obstruction (t + 1/t)/2."""
    return 0.5 * (t + 1.0 / t)


def graph_modulus_bound(sigma: float, K: float) -> float:
    """Sharp modulus bound for minimal surfaces in the cylinder shell
    1 < |u + i v| < sigma whose inner rim is the unit circle with slope K."""
    return math.log(
        (K * sigma + math.sqrt(K * K * sigma * sigma - K * K + 1.0)) / (K + 1.0)
    )


def bound(req: BoundRequest) -> BoundResult:
    """Evaluate a sharp (or flagged conjectured) bound."""
    kind = req.kind
    if kind == "nitsche":
        p = _need(req, t=(1.0, True))
        return BoundResult(kind, value=nitsche_bound(p["t"]))
    if kind in ("grotzsch_lower", "grotzsch_upper"):
        p = _need(req, t=(1.0, True), K=(1.0, False))
        lo, hi = p["t"] ** (1.0 / p["K"]), p["t"] ** p["K"]
        return BoundResult(kind, value=lo if kind == "grotzsch_lower" else hi,
                           interval=(lo, hi))
    if kind == "combined":
        p = _need(req, t=(1.0, True), K=(1.0, False))
        return BoundResult(kind, value=combined_lower_bound(p["t"], p["K"]))
    if kind == "conjectured_upper":
        p = _need(req, t=(1.0, True), K=(1.0, False))
        value = 0.5 * (p["K"] + 1.0) * p["t"] - 0.5 * (p["K"] - 1.0) / p["t"]
        return BoundResult(kind, value=value, conjectured=True)
    if kind == "th34":
        p = _need(req, t=(1.0, True), K=(1.0, False))
        return BoundResult(kind, value=combined_lower_bound(p["t"], p["K"]))
    if kind == "reverse_harnack":
        p = _need(req, modulus=(0.0, True), K=(1.0, False))
        m, K = p["modulus"], p["K"]
        value = ((K + 1.0) * math.exp(m) + (K - 1.0) * math.exp(-m)) / (2.0 * K)
        return BoundResult(kind, value=value)
    if kind == "graph":
        p = _need(req, sigma=(1.0, True), K=(1.0, False))
        return BoundResult(kind, value=graph_modulus_bound(p["sigma"], p["K"]))
    if kind == "conjectured_cosh":
        p = _need(req, modulus=(0.0, True))
        return BoundResult(kind, value=math.cosh(0.5 * p["modulus"]),
                           conjectured=True)
    raise ValueError(f"unknown bound kind {kind!r}")


def bound_chain_check(t: float, K: float) -> tuple[float, float]:
    """Gaps (combined - grotzsch_lower, combined - nitsche); both nonnegative
    by Young's inequality, with equality iff K = 1 resp. in the limit K -> oo."""
    if not t > 1.0:
        raise ValueError(f"t must be > 1, got {t}")
    if not K >= 1.0:
        raise ValueError(f"K must be >= 1, got {K}")
    c = combined_lower_bound(t, K)
    return c - t ** (1.0 / K), c - nitsche_bound(t)


# -- the folded-annulus example's distinguished radii ----------------------------


def example32_stated_root(bracket=(6.9, 6.95), tol: float = 1e-12) -> float:
    """Bisection root of p(x) = x^6 - 48 x^4 + 3 x^2 - 4 in the given bracket.

    This sextic is quoted alongside the folded-annulus example; see
    `example32_zero_radius` for the radius where the map actually vanishes.
    """

    def p(x: float) -> float:
        return x**6 - 48.0 * x**4 + 3.0 * x**2 - 4.0

    lo, hi = bracket
    flo, fhi = p(lo), p(hi)
    if flo * fhi > 0:
        raise ValueError(f"no sign change of the sextic on {bracket}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if p(lo) * p(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def example32_zero_radius(tol: float = 1e-12) -> float:
    """Radius s > 1 with h(i s) = 0 for the folded-annulus example map.

    Along the imaginary axis h(i s) = i q(s) with
    45 s^3 q(s) = -(4 s^6 - 48 s^4 + 3 s^2 - 4), so the zero is the positive
    root of 4 x^6 - 48 x^4 + 3 x^2 - 4 near sqrt(12).
    """

    def p(x: float) -> float:
        return 4.0 * x**6 - 48.0 * x**4 + 3.0 * x**2 - 4.0

    lo, hi = 3.0, 4.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if p(lo) * p(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
