"""Certified solvers for the twelve radius equations.

Every problem reduces to the smallest positive root of a strictly
decreasing real function on an interval whose right end is the first
relevant zero:

* spiral-likeness of order alpha with tilt gamma, and the Ma-Minda
  starlike radius, both solve  L(r) = 1 - m  where L is the logarithmic
  derivative r w'(r)/w(r) of the chosen normalization and m is
  (1-alpha) cos gamma, respectively beta;
* their convex analogues solve  C(r) = 1 - m  with C = 1 + r w''(r)/w'(r).

L and C decrease from 1 at the origin to -infinity at the first zero of w
(resp. w'), so bisection between endpoints of known sign is certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import oracle
from .errors import AdmissibilityError, BracketFailure, SingularPoint
from .mercer import Kind, MercerParams, convexity_expr, log_deriv
from .targets import TargetFunction
from .zeros import Which, find_zeros


@dataclass(frozen=True)
class Spirallike:
    alpha: float
    gamma: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError("alpha must lie in [0, 1)")
        if not abs(self.gamma) < math.pi / 2.0:
            raise ValueError("gamma must lie in (-pi/2, pi/2)")


@dataclass(frozen=True)
class ConvexSpirallike(Spirallike):
    pass


@dataclass(frozen=True)
class StarPhi:
    phi: TargetFunction


@dataclass(frozen=True)
class ConvexPhi:
    phi: TargetFunction


@dataclass(frozen=True)
class RadiusQuery:
    params: MercerParams
    kind: Kind
    problem: Spirallike | ConvexSpirallike | StarPhi | ConvexPhi

    def __post_init__(self) -> None:
        if self.kind is Kind.F and self.params.nu == 0.0:
            raise AdmissibilityError("kind f requires nu != 0")


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    bracket: tuple
    residual: float
    iterations: int
    oracle_checked: bool = False


def _margin(problem) -> float:
    """The positive constant m the equation drives the expression down by."""
    if isinstance(problem, (Spirallike, ConvexSpirallike)):
        return (1.0 - problem.alpha) * math.cos(problem.gamma)
    return problem.phi.beta


def _first_zero(p: MercerParams, which: Which) -> float:
    return find_zeros(p, which, 1).zeros[0]


def _right_end(q: RadiusQuery) -> float:
    convex = isinstance(q.problem, (ConvexSpirallike, ConvexPhi))
    if not convex:
        lam1 = _first_zero(q.params, Which.N)
        return lam1 * lam1 if q.kind is Kind.H else lam1
    if q.kind is Kind.F:
        return _first_zero(q.params, Which.NPRIME)
    if q.kind is Kind.G:
        return _first_zero(q.params, Which.GPRIME)
    return _first_zero(q.params, Which.HPRIME)


def _equation(q: RadiusQuery, tol: float = 1e-12):
    m = _margin(q.problem)
    convex = isinstance(q.problem, (ConvexSpirallike, ConvexPhi))
    expr = convexity_expr if convex else log_deriv
    p, kind = q.params, q.kind

    def fn(r: float) -> float:
        return expr(p, kind, complex(r), tol).real - (1.0 - m)

    return fn


def _solve(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    fn = _equation(q, tol)
    right = _right_end(q)
    lo = right * 1e-12
    iterations = 0

    flo = fn(lo)
    iterations += 1
    if not flo > 0.0:
        raise BracketFailure(
            f"expected positive sign near the origin, got {flo:.3g} at r={lo:.3g}"
        )
    hi = None
    for shrink in (1e-12, 1e-9, 1e-6, 1e-3):
        cand = right * (1.0 - shrink)
        try:
            fhi = fn(cand)
        except SingularPoint:
            continue
        iterations += 1
        if fhi < 0.0:
            hi = cand
            break
    if hi is None:
        raise BracketFailure(
            "no negative sign found approaching the right end; "
            "zero table may be inaccurate"
        )

    xtol = max(1e-15, 5e-15 * hi)
    while hi - lo > xtol and iterations < 250:
        mid = 0.5 * (lo + hi)
        val = fn(mid)
        iterations += 1
        if val > 0.0:
            lo = mid
        elif val < 0.0:
            hi = mid
        else:
            lo = hi = mid
    radius = 0.5 * (lo + hi)
    residual = abs(fn(radius))
    return RadiusResult(radius=radius, bracket=(lo, hi), residual=residual, iterations=iterations)


def spirallike_radius(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    """Radius of spiral-likeness of order alpha with tilt gamma."""
    if not isinstance(q.problem, Spirallike) or isinstance(q.problem, ConvexSpirallike):
        raise TypeError("query problem must be Spirallike")
    return _solve(q, tol)


def convex_spirallike_radius(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    """Radius of convex spiral-likeness of order alpha with tilt gamma."""
    if not isinstance(q.problem, ConvexSpirallike):
        raise TypeError("query problem must be ConvexSpirallike")
    return _solve(q, tol)


def maminda_starlike_radius(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    """Largest r with r w'/w mapping the disk of radius r into phi(D)."""
    if not isinstance(q.problem, StarPhi):
        raise TypeError("query problem must be StarPhi")
    return _solve(q, tol)


def maminda_convex_radius(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    """Largest r with 1 + r w''/w' mapping the disk of radius r into phi(D).

    Solves the ratio form r w''(r)/w'(r) + beta = 0 (the proof form; the
    displayed product form differs by a spurious factor for kind f and is
    reported by ``statement_residual`` for comparison).
    """
    if not isinstance(q.problem, ConvexPhi):
        raise TypeError("query problem must be ConvexPhi")
    return _solve(q, tol)


def solve(q: RadiusQuery, tol: float = 1e-12) -> RadiusResult:
    """Dispatch on the query's problem type."""
    if isinstance(q.problem, ConvexSpirallike):
        return convex_spirallike_radius(q, tol)
    if isinstance(q.problem, Spirallike):
        return spirallike_radius(q, tol)
    if isinstance(q.problem, StarPhi):
        return maminda_starlike_radius(q, tol)
    return maminda_convex_radius(q, tol)


def statement_residual(q: RadiusQuery, radius: float) -> float:
    """Residual of the alternative displayed equation at ``radius``.

    For ConvexPhi with kind f the displayed equation carries beta*nu where
    the proof uses beta; both residuals are reported so the discrepancy is
    visible in verbose output.  For other queries this equals the solved
    equation's residual.
    """
    if isinstance(q.problem, ConvexPhi) and q.kind is Kind.F:
        beta = q.problem.phi.beta
        val = convexity_expr(q.params, q.kind, complex(radius)).real - 1.0
        return abs(val + beta * q.params.nu)
    return _solve_residual(q, radius)


def _solve_residual(q: RadiusQuery, radius: float) -> float:
    return abs(_equation(q)(radius))


def _whole_disk_qualifies(p: MercerParams, kind: Kind, phi: TargetFunction, convex: bool) -> bool:
    problem = ConvexPhi(phi) if convex else StarPhi(phi)
    q = RadiusQuery(p, kind, problem)
    if _right_end(q) <= 1.0:
        return False
    try:
        return _equation(q)(1.0) > 0.0
    except SingularPoint:
        # z = 1 sits on a pole: the radius is below 1
        return False


def sufficient_star(p: MercerParams, kind: Kind, phi: TargetFunction) -> bool:
    """Sufficient condition for membership on the whole unit disk.

    Equivalent to the N-term inequality 1 - r w'(r)/w(r) < beta at r = 1,
    guarded by r = 1 lying before the first zero of w.  When true, the
    starlike radius either exceeds 1 or the bracket covers the whole disk.
    """
    return _whole_disk_qualifies(p, kind, phi, convex=False)


def sufficient_convex(p: MercerParams, kind: Kind, phi: TargetFunction) -> bool:
    """Convex analogue of ``sufficient_star`` (uses -r w''/w' at r = 1)."""
    if kind is Kind.F and p.nu == 0.0:
        raise AdmissibilityError("kind f requires nu != 0")
    return _whole_disk_qualifies(p, kind, phi, convex=True)


def oracle_check(
    q: RadiusQuery,
    radius: float,
    n: int = 4096,
    inner: float = 0.999,
    outer: float = 1.01,
) -> bool:
    """Two-sided boundary-scan verification of a solved radius.

    Uses the disk criterion m - max |expr - 1|, which every radius
    equation is exactly two-sided for: membership must hold at
    inner*radius and fail at outer*radius.  (The raw half-plane margin of
    the tilted problems is one-sided only: for gamma != 0 the disk is a
    strict subset of the half-plane, so the equation radius is a certified
    lower bound for the half-plane class.)
    """
    convex = isinstance(q.problem, (ConvexSpirallike, ConvexPhi))
    mode = oracle.Mode.CONVEX if convex else oracle.Mode.STAR
    m = _margin(q.problem)
    p, kind = q.params, q.kind
    ok_in = oracle.disk_margin(p, kind, radius * inner, m, mode, n).min_margin > 0.0
    ok_out = oracle.disk_margin(p, kind, radius * outer, m, mode, n).min_margin < 0.0
    return ok_in and ok_out


def checked(q: RadiusQuery, result: RadiusResult, n: int = 4096) -> RadiusResult:
    """Return a copy of ``result`` with the oracle verdict recorded."""
    ok = oracle_check(q, result.radius, n=n)
    if not ok:
        raise BracketFailure("two-sided oracle check failed at the solved radius")
    return replace(result, oracle_checked=True)
