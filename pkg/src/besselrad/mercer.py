"""The Bessel-derivative combination N(z) = a z^2 J'' + b z J' + c J.

Houses the parameter quadratic Q, the admissibility gate, N and its first
two derivatives assembled from the term-wise Bessel series, the three
normalizations (power, plain and square-root scaling, called f/g/h) and
their logarithmic-derivative and convexity expressions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import bessel
from .errors import AdmissibilityError, SingularPoint

#: a denominator d with |d| < SINGULAR_THRESHOLD*(1+|numerator|) is treated
#: as a genuine zero rather than cancellation noise
SINGULAR_THRESHOLD = 1e-13


class Kind(enum.Enum):
    """Selector for the three normalizations."""

    F = "f"
    G = "g"
    H = "h"

    @classmethod
    def from_str(cls, s: str) -> "Kind":
        try:
            return cls(s.lower())
        except ValueError:
            raise ValueError(f"unknown normalization kind {s!r}, want f, g or h") from None


def _q(a: float, b: float, c: float, t: float) -> float:
    return a * t * (t - 1.0) + b * t + c


def _largest_real_root(a: float, b: float, c: float):
    """Largest real root of a t(t-1) + b t + c, or None if there is none."""
    # quadratic in t with coefficients (a, b-a, c)
    B = b - a
    if a == 0.0:
        if B == 0.0:
            return None
        return -c / B
    disc = B * B - 4.0 * a * c
    if disc < 0.0:
        return None
    if c == 0.0:
        return max(0.0, -B / a)
    sq = math.sqrt(disc)
    # stable form: avoid cancellation between -B and sq
    if B >= 0.0:
        t1 = (-B - sq) / (2.0 * a)
    else:
        t1 = (-B + sq) / (2.0 * a)
    t2 = c / (a * t1)
    return max(t1, t2)


@dataclass(frozen=True)
class MercerParams:
    """Admissible parameter tuple (a, b, c, nu).

    Admissible classes: c = 0 with a != b, or c > 0 with a < b.  The
    degenerate case c = 0, a = b != 0 is also accepted: there N reduces to
    a (nu^2 - z^2) J_nu, whose zeros are real for nu >= 0, and the whole
    machinery goes through unchanged.  In every case nu must be at least
    max(0, nu0) with nu0 the largest real root of Q, and Q(nu) must not
    vanish (the normalizations divide by it).
    """

    a: float
    b: float
    c: float
    nu: float

    def __post_init__(self) -> None:
        a, b, c, nu = self.a, self.b, self.c, self.nu
        for name, val in (("a", a), ("b", b), ("c", c), ("nu", nu)):
            if not math.isfinite(val):
                raise AdmissibilityError(f"{name} must be finite, got {val!r}")
        main = (c == 0.0 and a != b) or (c > 0.0 and a < b)
        degenerate = c == 0.0 and a == b and a != 0.0
        if not (main or degenerate):
            raise AdmissibilityError(
                f"(a={a}, b={b}, c={c}) is not admissible: need c=0 with a!=b, "
                "c>0 with a<b, or the degenerate c=0 with a=b!=0"
            )
        root = _largest_real_root(a, b, c)
        low = max(0.0, root) if root is not None else 0.0
        if nu < low:
            raise AdmissibilityError(f"nu={nu} must be >= max(0, nu0)={low}")
        if _q(a, b, c, nu) == 0.0:
            raise AdmissibilityError(f"Q(nu)=0 at nu={nu}; normalizations divide by it")

    @property
    def q_at_nu(self) -> float:
        return _q(self.a, self.b, self.c, self.nu)


def q_poly(p: MercerParams, t: float) -> float:
    """The parameter quadratic a t(t-1) + b t + c."""
    return _q(p.a, p.b, p.c, t)


def nu0(p: MercerParams):
    """Largest real root of the parameter quadratic, or None."""
    return _largest_real_root(p.a, p.b, p.c)


def _n_at_zero(p: MercerParams, order: int) -> complex:
    """Limit of the order-th derivative of N at z = 0 (term-wise)."""
    a, b, c, nu = p.a, p.b, p.c, p.nu
    coeff = 1.0 / math.gamma(nu + 1.0)
    value = 0.0
    for n in range(order // 2 + 2):
        expo = 2 * n + nu - order
        fall = bessel._falling(2 * n + nu, order)
        qn = _q(a, b, c, 2 * n + nu)
        if expo < -1e-15 and fall * qn != 0.0:
            raise SingularPoint(f"N^({order}) is singular at z=0 for nu={nu}")
        if abs(expo) <= 1e-15 and fall * qn != 0.0:
            value += coeff * qn * fall / 2.0**order
        coeff = -coeff / ((n + 1.0) * (n + nu + 1.0))
    return complex(value)


def _n_derivs(p: MercerParams, z, upto: int, tol: float = 1e-12):
    """N, N', ..., N^(upto) at z, assembled from the Bessel series.

    ``z`` may be a complex scalar or ndarray (no zero entries for
    ``upto`` >= 1).  The assembly uses J derivatives up to order upto+2;
    the fourth derivative needed by N'' comes from the same term-wise
    series extended internally.
    """
    a, b, c, nu = p.a, p.b, p.c, p.nu
    # split the tolerance by the assembly weights so a z^2 J'' cannot
    # amplify a per-series tail past the requested accuracy
    zmax2 = float(np.max(np.abs(z))) ** 2
    tol_each = tol / ((1.0 + zmax2) * (1.0 + abs(a) + abs(b) + abs(c)))
    j = [bessel._series(nu, z, k, tol_each)[0] for k in range(upto + 3)]
    out = [a * z * z * j[2] + b * z * j[1] + c * j[0]]
    if upto >= 1:
        out.append(a * z * z * j[3] + (2 * a + b) * z * j[2] + (b + c) * j[1])
    if upto >= 2:
        out.append(
            a * z * z * j[4] + (4 * a + b) * z * j[3] + (2 * a + 2 * b + c) * j[2]
        )
    return out


def n_nu(p: MercerParams, z: complex, deriv_order: int = 0, tol: float = 1e-12) -> complex:
    """N and its derivatives: order 0 is N itself, up to order 2."""
    if deriv_order not in (0, 1, 2):
        raise ValueError("deriv_order must be 0, 1 or 2")
    if not isinstance(z, np.ndarray) and complex(z) == 0.0:
        return _n_at_zero(p, deriv_order)
    return _n_derivs(p, z, deriv_order, tol)[deriv_order]


def _check_denominator(num, den, den_scale=None) -> None:
    """Flag denominators that are zero to working precision.

    The comparison scale is the magnitude of the numerator plus the summed
    magnitudes of the denominator's additive parts, so a common z^nu factor
    shrinking both sides near the origin does not trip the guard while a
    genuine zero (or cancellation to noise level) does.
    """
    scale = np.abs(den) if den_scale is None else den_scale
    bad = (den == 0) | (np.abs(den) < SINGULAR_THRESHOLD * (np.abs(num) + scale))
    if np.any(bad):
        raise SingularPoint("denominator underflowed the singularity threshold")


def _require_kind(p: MercerParams, kind: Kind) -> None:
    if kind is Kind.F and p.nu == 0.0:
        raise AdmissibilityError("kind f requires nu != 0")


def log_deriv(p: MercerParams, kind: Kind, z, tol: float = 1e-12):
    """z w'(z)/w(z) for the normalization w in {f, g, h}.

    In N-terms: f gives (1/nu) z N'/N, g gives (1-nu) + z N'/N, and h gives
    (1 - nu/2) + (1/2) sqrt(z) N'(sqrt z)/N(sqrt z) on the principal branch.
    ``z`` may be a complex scalar or ndarray.
    """
    _require_kind(p, kind)
    scalar = not isinstance(z, np.ndarray)
    zz = np.asarray(z, dtype=complex)
    if kind is Kind.H:
        s = np.sqrt(zz)
        n0, n1 = _n_derivs(p, s, 1, tol)
        num = s * n1
        _check_denominator(num, n0)
        out = (1.0 - p.nu / 2.0) + 0.5 * num / n0
    else:
        n0, n1 = _n_derivs(p, zz, 1, tol)
        num = zz * n1
        _check_denominator(num, n0)
        if kind is Kind.F:
            out = num / n0 / p.nu
        else:
            out = (1.0 - p.nu) + num / n0
    return complex(out) if scalar else out


def convexity_expr(p: MercerParams, kind: Kind, z, tol: float = 1e-12):
    """1 + z w''(z)/w'(z) for the normalization w in {f, g, h}.

    The g and h cases use the explicit N-term numerator/denominator forms
    obtained by differentiating the normalizations directly; h is evaluated
    in its own variable through s = sqrt(z).
    """
    _require_kind(p, kind)
    nu = p.nu
    scalar = not isinstance(z, np.ndarray)
    zz = np.asarray(z, dtype=complex)
    if kind is Kind.F:
        n0, n1, n2 = _n_derivs(p, zz, 2, tol)
        num1, num2 = zz * n2, zz * n1
        _check_denominator(num1, n1)
        _check_denominator(num2, n0)
        out = 1.0 + num1 / n1 + (1.0 / nu - 1.0) * num2 / n0
    elif kind is Kind.G:
        n0, n1, n2 = _n_derivs(p, zz, 2, tol)
        num = zz * zz * n2 + (2.0 - 2.0 * nu) * zz * n1 + (nu * nu - nu) * n0
        den = zz * n1 + (1.0 - nu) * n0
        scale = np.abs(zz * n1) + abs(1.0 - nu) * np.abs(n0)
        _check_denominator(num, den, scale)
        out = 1.0 + num / den
    else:
        s = np.sqrt(zz)
        n0, n1, n2 = _n_derivs(p, s, 2, tol)
        num = zz * n2 + (3.0 - 2.0 * nu) * s * n1 + (nu * nu - 2.0 * nu) * n0
        den = 2.0 * s * n1 + 2.0 * (2.0 - nu) * n0
        scale = 2.0 * np.abs(s * n1) + 2.0 * abs(2.0 - nu) * np.abs(n0)
        _check_denominator(num, den, scale)
        out = 1.0 + num / den
    return complex(out) if scalar else out
