"""Radii of spirallikeness, convexity and Ma-Minda-type starlikeness for
normalized combinations of Bessel function derivatives N(z) = a z^2 J'' +
b z J' + c J, with certified zero tables and boundary-scan verification."""

from .bessel import SeriesEval, bessel_j, bessel_j_deriv
from .errors import (
    AdmissibilityError,
    BesselradError,
    BracketFailure,
    BranchCut,
    DomainError,
    NonConvergent,
    ScanExhausted,
    SingularPoint,
)
from .mercer import Kind, MercerParams, convexity_expr, log_deriv, n_nu, nu0, q_poly
from .oracle import (
    BoundaryScan,
    Mode,
    scan_convex_spirallike,
    scan_phi_membership,
    scan_spirallike,
)
from .radii import (
    ConvexPhi,
    ConvexSpirallike,
    RadiusQuery,
    RadiusResult,
    Spirallike,
    StarPhi,
    convex_spirallike_radius,
    maminda_convex_radius,
    maminda_starlike_radius,
    oracle_check,
    spirallike_radius,
    sufficient_convex,
    sufficient_star,
)
from .targets import TargetFunction, beta_closed, beta_oracle
from .zeros import Which, ZeroTable, check_interlacing, find_zeros, rayleigh_sums, weierstrass_partial

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "BesselradError",
    "BoundaryScan",
    "BracketFailure",
    "BranchCut",
    "ConvexPhi",
    "ConvexSpirallike",
    "DomainError",
    "Kind",
    "MercerParams",
    "Mode",
    "NonConvergent",
    "RadiusQuery",
    "RadiusResult",
    "ScanExhausted",
    "SeriesEval",
    "SingularPoint",
    "Spirallike",
    "StarPhi",
    "TargetFunction",
    "Which",
    "ZeroTable",
    "bessel_j",
    "bessel_j_deriv",
    "beta_closed",
    "beta_oracle",
    "check_interlacing",
    "convex_spirallike_radius",
    "convexity_expr",
    "find_zeros",
    "log_deriv",
    "maminda_convex_radius",
    "maminda_starlike_radius",
    "n_nu",
    "nu0",
    "oracle_check",
    "q_poly",
    "rayleigh_sums",
    "scan_convex_spirallike",
    "scan_phi_membership",
    "scan_spirallike",
    "spirallike_radius",
    "sufficient_convex",
    "sufficient_star",
    "weierstrass_partial",
]
