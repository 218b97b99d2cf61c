"""Minimal surfaces over ring domains.

Spectral Björling solver for doubly connected minimal surfaces, geometric
analysis of the resulting isothermal parametrizations (Gauss map, modulus,
distortion, area, height periods), sharp modulus/distortion bound
evaluators, and numerical verification of the integral inequalities that
make the bounds sharp.
"""

from .bjorling import (
    BjorlingData,
    SlopeData,
    SolveOptions,
    SolveReport,
    extend_harmonic,
    neumann_from_beltrami,
    nu_from_gauss,
    slope_neumann,
    solve,
    w_neumann,
)
from .extremals import BoundRequest, BoundResult, bound, bound_chain_check, fixture, principal
from .series import (
    AnnularHarmonic,
    Annulus,
    FourierSeries,
    analyze,
    disk_extension,
    quadrature_mean,
    theta_grid,
)
from .surface import (
    GaussVector,
    Mesh,
    MinimalSurface,
    area,
    beltrami_mu,
    beltrami_nu,
    build_mesh,
    conformality_report,
    conformality_residual,
    distortion,
    gauss_map,
    image_radii,
    lift_w,
    modulus,
    period_defect,
    write_obj,
)
from .verify import (
    QFormCoeffs,
    VerifyReport,
    boundary_checks,
    jacobian_energy_gap,
    positive_definite_sweep,
    prop51,
    prop52_terms,
    qform_assembly_check,
    qform_coeffs,
    random_circle_homeo,
    random_harmonic,
    run_suite,
)

__version__ = "0.1.0"
