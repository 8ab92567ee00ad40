"""Catalog of target regions for the subordination-style radius problems.

Each target is an analytic univalent map phi on the closed unit disk with
phi(0) = 1, symmetric about the real axis, together with the radius beta of
the largest disk centered at 1 contained in phi(D).  ``beta_closed`` gives
the known closed forms; ``beta_oracle`` recomputes beta by dense boundary
sampling and serves as the independent check.

The conic family covers the imaginary axis (kappa=0), hyperbolas
(0<kappa<1), the parabola (kappa=1) and ellipses (kappa>1); the ellipse
case needs the complete and incomplete Legendre integrals of the first
kind, computed here by the arithmetic-geometric mean and by adaptive
quadrature along the straight segment.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import BranchCut

_NAMES = ("janowski", "sl", "sqrt1p", "exp", "crescent", "sigmoid", "sine", "bell", "conic")

_CUT_TOL = 1e-12


def _agm(a: float, b: float) -> float:
    # quadratic convergence; the cap guards against one-ulp limit cycles
    for _ in range(64):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_elliptic_k(t: float) -> float:
    """K(t) with modulus t in [0, 1), via the arithmetic-geometric mean."""
    if not 0.0 <= t < 1.0:
        raise ValueError("modulus must lie in [0, 1)")
    return math.pi / (2.0 * _agm(1.0, math.sqrt(1.0 - t * t)))


def _kappa_of_modulus(t: float) -> float:
    ratio = math.pi * complete_elliptic_k(math.sqrt(1.0 - t * t)) / (2.0 * complete_elliptic_k(t))
    if ratio > 700.0:
        return math.inf
    return math.cosh(ratio)


def solve_conic_modulus(kappa: float) -> float:
    """Modulus t in (0,1) with cosh(pi K'(t) / 2 K(t)) = kappa (kappa > 1).

    The map is strictly decreasing in t, so plain bisection is certified.
    """
    if kappa <= 1.0:
        raise ValueError("modulus solve applies to kappa > 1 only")
    lo, hi = 1e-15, 1.0 - 1e-15
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _kappa_of_modulus(mid) > kappa:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    return 0.5 * (lo + hi)


def incomplete_elliptic_f(w: complex, t: float, tol: float = 1e-11) -> complex:
    """F(w, t) = integral of 1/sqrt((1-x^2)(1-t^2 x^2)) from 0 to w.

    Integrates along the straight segment; the two square roots are taken
    on principal branches factor by factor, which stays continuous as long
    as no branch point comes within _CUT_TOL of the segment.
    """
    w = complex(w)
    if w == 0.0:
        return 0.0 + 0.0j
    for s in (1.0, -1.0):
        for pole in (s / w, s / (t * w)):
            # distance from the singular parameter value to the segment [0,1]
            re, im = pole.real, pole.imag
            if 0.0 <= re <= 1.0:
                d = abs(im)
            else:
                d = min(abs(pole), abs(pole - 1.0))
            if d < _CUT_TOL:
                raise BranchCut("integration path passes through a branch point")

    def g(u: float) -> complex:
        x = w * u
        return 1.0 / (cmath.sqrt(1.0 - x * x) * cmath.sqrt(1.0 - t * t * x * x))

    def simpson(a: float, b: float, fa: complex, fm: complex, fb: complex, whole: complex, eps: float, depth: int) -> complex:
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = g(lm), g(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth <= 0 or abs(left + right - whole) < 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return simpson(a, m, fa, flm, fm, left, eps / 2.0, depth - 1) + simpson(
            m, b, fm, frm, fb, right, eps / 2.0, depth - 1
        )

    fa, fm, fb = g(0.0), g(0.5), g(1.0)
    whole = (fa + 4.0 * fm + fb) / 6.0
    return w * simpson(0.0, 1.0, fa, fm, fb, whole, tol, 48)


@dataclass(frozen=True)
class TargetFunction:
    """A target map phi with its inner-disk radius beta.

    Construct through ``from_name`` (CLI spellings ``janowski:A:B``,
    ``conic:kappa`` and the plain names) or the keyword constructor.  For
    ellipse targets the Legendre modulus is solved once at construction.
    """

    kind: str
    A: float = 1.0
    B: float = -1.0
    kappa: float = 0.0
    beta: float = field(default=0.0)
    conic_t: float = field(default=0.0)
    conic_k: float = field(default=0.0)

    def __post_init__(self) -> None:
        if self.kind not in _NAMES:
            raise ValueError(f"unknown target {self.kind!r}")
        if self.kind == "janowski" and not (-1.0 <= self.B < self.A <= 1.0):
            raise ValueError("janowski parameters need -1 <= B < A <= 1")
        if self.kind == "conic":
            if self.kappa < 0.0:
                raise ValueError("conic parameter must be >= 0")
            if self.kappa > 1.0:
                t = solve_conic_modulus(self.kappa)
                object.__setattr__(self, "conic_t", t)
                object.__setattr__(self, "conic_k", complete_elliptic_k(t))
        object.__setattr__(self, "beta", beta_closed(self))

    @classmethod
    def from_name(cls, name: str) -> "TargetFunction":
        parts = name.lower().split(":")
        head = parts[0]
        if head == "janowski":
            if len(parts) != 3:
                raise ValueError("janowski target needs janowski:A:B")
            return cls(kind="janowski", A=float(parts[1]), B=float(parts[2]))
        if head == "conic":
            if len(parts) != 2:
                raise ValueError("conic target needs conic:kappa")
            return cls(kind="conic", kappa=float(parts[1]))
        if len(parts) != 1:
            raise ValueError(f"target {name!r} takes no parameters")
        return cls(kind=head)


def beta_closed(phi: TargetFunction) -> float:
    """Closed-form radius of the largest disk centered at 1 inside phi(D)."""
    k = phi.kind
    if k == "janowski":
        return (phi.A - phi.B) / (1.0 + abs(phi.B))
    if k == "sl":
        return math.sqrt(2.0 - 2.0 * math.sqrt(2.0) + math.sqrt(2.0 * math.sqrt(2.0) - 2.0))
    if k == "sqrt1p":
        return math.sqrt(2.0) - 1.0
    if k == "exp":
        return 1.0 - 1.0 / math.e
    if k == "crescent":
        return 2.0 - math.sqrt(2.0)
    if k == "sigmoid":
        return (math.e - 1.0) / (math.e + 1.0)
    if k == "sine":
        return math.sin(1.0)
    if k == "bell":
        return 1.0 - math.exp(math.exp(-1.0) - 1.0)
    return 1.0 / (phi.kappa + 1.0)


def eval(phi: TargetFunction, zeta: complex) -> complex:
    """phi(zeta) on the closed unit disk, principal branches throughout."""
    z = complex(zeta)
    if abs(z) > 1.0 + 1e-9:
        raise ValueError("target functions are defined on the closed unit disk")
    k = phi.kind
    if k == "janowski":
        den = 1.0 + phi.B * z
        if abs(den) < _CUT_TOL:
            raise BranchCut("janowski pole on the evaluation point")
        return (1.0 + phi.A * z) / den
    if k == "sl":
        r2 = math.sqrt(2.0)
        den = 1.0 + 2.0 * (r2 - 1.0) * z
        if abs(den) < _CUT_TOL:
            raise BranchCut("pole on the evaluation point")
        return r2 - (r2 - 1.0) * cmath.sqrt((1.0 - z) / den)
    if k == "sqrt1p":
        return cmath.sqrt(1.0 + z)
    if k == "exp":
        return cmath.exp(z)
    if k == "crescent":
        return z + cmath.sqrt(1.0 + z * z)
    if k == "sigmoid":
        return 2.0 / (1.0 + cmath.exp(-z))
    if k == "sine":
        return 1.0 + cmath.sin(z)
    if k == "bell":
        return cmath.exp(cmath.exp(z) - 1.0)
    # conic family
    kap = phi.kappa
    if kap == 0.0:
        den = 1.0 - z
        if abs(den) < _CUT_TOL:
            raise BranchCut("half-plane target is unbounded at zeta=1")
        return (1.0 + z) / den
    s = cmath.sqrt(z)
    if kap == 1.0:
        den = 1.0 - s
        if abs(den) < _CUT_TOL:
            raise BranchCut("parabola target is unbounded at zeta=1")
        logterm = cmath.log((1.0 + s) / den)
        return 1.0 + (2.0 / math.pi**2) * logterm * logterm
    if kap < 1.0:
        den = 1.0 - s
        if abs(den) < _CUT_TOL:
            raise BranchCut("hyperbola target is unbounded at zeta=1")
        atanh = 0.5 * cmath.log((1.0 + s) / den)
        amp = (2.0 / math.pi) * math.acos(kap)
        sh = cmath.sinh(amp * atanh)
        return 1.0 + 2.0 / (1.0 - kap * kap) * sh * sh
    t = phi.conic_t
    f_val = incomplete_elliptic_f(s / math.sqrt(t), t)
    sn = cmath.sin(math.pi * f_val / (2.0 * phi.conic_k))
    return 1.0 + 2.0 / (kap * kap - 1.0) * sn * sn


def beta_oracle(phi: TargetFunction, n_samples: int) -> float:
    """min over the boundary of |phi - 1|, grid plus golden refinement.

    This equals the inner-disk radius for the univalent symmetric targets
    in the catalog.  The grid is offset by half a step so branch points
    sitting exactly at grid angles are never hit.
    """
    if n_samples < 1000:
        raise ValueError("need at least 1000 samples")
    h = 2.0 * math.pi / n_samples

    def dist(theta: float) -> float:
        return abs(eval(phi, cmath.exp(1j * theta)) - 1.0)

    vals = []
    best, best_j = math.inf, 0
    for j in range(n_samples):
        d = dist((j + 0.5) * h)
        vals.append(d)
        if d < best:
            best, best_j = d, j
    lo = (best_j - 0.5) * h
    hi = (best_j + 1.5) * h
    # golden-section refinement around the grid minimum
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = dist(x1), dist(x2)
    for _ in range(80):
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = dist(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = dist(x2)
        if hi - lo < 1e-12:
            break
    return min(best, f1, f2)
