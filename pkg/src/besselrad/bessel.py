"""Bessel functions of the first kind via the defining power series.

Evaluation is series-only: every term of

    J_v(z) = sum_n (-1)^n / (n! Gamma(n+v+1)) (z/2)^(2n+v)

is differentiated term-wise for derivative orders up to four.  This is
accurate in double precision for |z| up to roughly 25-30, which covers
every radius and every bracketing zero this package needs.  No asymptotic
expansions are attempted; callers with larger |z| get ``NonConvergent``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergent

#: hard cap on series terms; exceeding it raises NonConvergent
MAX_TERMS = 200


@dataclass(frozen=True)
class SeriesEval:
    """Result of a truncated series evaluation.

    ``truncation_bound`` is a certified absolute bound on the dropped tail
    (rounding error is not included; it is at the scale of eps times the
    largest term encountered).
    """

    value: complex
    terms_used: int
    truncation_bound: float

    def __post_init__(self) -> None:
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if self.truncation_bound < 0:
            raise ValueError("truncation_bound must be >= 0")


def _falling(p: float, k: int) -> float:
    """p (p-1) ... (p-k+1); equals 1 for k=0."""
    out = 1.0
    for j in range(k):
        out *= p - j
    return out


def _series_at_zero(nu: float, order: int) -> complex:
    """Exact limit of the order-th derivative series at z = 0.

    Only the term whose differentiated power is exactly zero survives;
    a negative power with a non-vanishing coefficient is singular.
    """
    coeff = 1.0 / math.gamma(nu + 1.0)
    value = 0.0
    for n in range(order // 2 + 2):
        expo = 2 * n + nu - order
        fall = _falling(2 * n + nu, order)
        if expo < -1e-15 and fall != 0.0:
            raise DomainError(
                f"derivative of order {order} of J_{nu} is singular at z=0"
            )
        if abs(expo) <= 1e-15 and fall != 0.0:
            value += coeff * fall / 2.0**order
        coeff = -coeff / ((n + 1.0) * (n + nu + 1.0))
    return complex(value)


def _series(nu, z, order, tol=1e-12, max_terms=MAX_TERMS):
    """Evaluate the order-th term-wise derivative of the J_nu series.

    ``z`` may be a complex scalar or an ndarray; the returned value has the
    same shape.  Returns ``(value, terms_used, truncation_bound)``.  The
    bound is uniform over all elements and covers the dropped tail only;
    rounding noise is separately limited by eps times the largest term.
    """
    if nu <= -1.0:
        raise ValueError("order of the Bessel function must exceed -1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    scalar = not isinstance(z, np.ndarray)
    if scalar and complex(z) == 0.0:
        return _series_at_zero(nu, order), 1, 0.0

    zz = np.asarray(z, dtype=complex)
    half = zz / 2.0
    w = half * half
    wmax = float(np.max(np.abs(w)))
    pre_abs = np.abs(half) ** (nu - order) / 2.0**order
    prefac = half ** (nu - order) / 2.0**order

    coeff = 1.0 / math.gamma(nu + 1.0)
    total = np.zeros_like(zz)
    wpow = np.ones_like(zz)
    terms = 0
    bound = math.inf
    # overflow of intermediate powers at very large |z| is an expected
    # route into NonConvergent, not an error state
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(max_terms):
            fall = _falling(2 * n + nu, order)
            term = (coeff * fall) * wpow
            total = total + term
            terms = n + 1
            tmag = float(np.max(np.abs(term) * pre_abs))
            # once the ratio of consecutive term magnitudes is provably < 1
            # the tail is dominated by a geometric series
            shift = 2 * n + nu - order + 1
            if shift > 0:
                ratio = wmax / ((n + 1.0) * (n + 1.0 + nu))
                ratio *= (1.0 + 2.0 / shift) ** order
                if ratio < 1.0:
                    bound = tmag * ratio / (1.0 - ratio)
                    if bound <= tol:
                        break
            coeff = -coeff / ((n + 1.0) * (n + 1.0 + nu))
            wpow = wpow * w
        else:
            raise NonConvergent(
                f"series for J_{nu}^({order}) at |z|~{abs(np.max(np.abs(zz))):.3g} "
                f"did not reach tol={tol:g} within {max_terms} terms"
            )

    value = prefac * total
    if scalar:
        return complex(value), terms, bound
    return value, terms, bound


def bessel_j(nu: float, z: complex, tol: float = 1e-12) -> SeriesEval:
    """J_nu(z) for real nu > -1 and complex z (principal branch of z^nu)."""
    value, terms, bound = _series(nu, z, 0, tol)
    return SeriesEval(value, terms, bound)


def bessel_j_deriv(nu: float, z: complex, order: int, tol: float = 1e-12) -> SeriesEval:
    """order-th derivative of J_nu at z, order in 1..3, term-wise series."""
    if order not in (1, 2, 3):
        raise ValueError("order must be 1, 2 or 3")
    value, terms, bound = _series(nu, z, order, tol)
    return SeriesEval(value, terms, bound)
