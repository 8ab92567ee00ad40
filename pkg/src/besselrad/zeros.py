"""Positive zeros of N, N' and of the derivatives of the g/h normalizations.

Zeros are located by scanning the scaled entire forms (the origin factor
z^nu divided out, so z = 0 is never mistaken for a listed zero) and refined
by bisection, which certifies each zero by a sign-change bracket.  Below
``MP_HORIZON`` the scaled series is summed in double precision; beyond it
the same series is summed with mpmath at a precision that absorbs the
exponential cancellation, so sign decisions stay reliable out to the scan
limit.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import ScanExhausted
from .mercer import MercerParams, _q

#: |x| above which the scaled series is summed in extended precision.  The
#: double-precision noise floor of the alternating sum is about e^x * eps
#: relative to the local amplitude; x = 12 keeps it near 2e-11, safely
#: below the 1e-10 residual certification of the tabulated zeros.
MP_HORIZON = 12.0

#: default scan limit
DEFAULT_X_MAX = 50.0 * math.pi

_BASE_STEP = math.pi / 8.0


class Which(enum.Enum):
    """Whose zeros a table holds."""

    N = "n"
    NPRIME = "nprime"
    GPRIME = "gprime"
    HPRIME = "hprime"

    @classmethod
    def from_str(cls, s: str) -> "Which":
        try:
            return cls(s.lower())
        except ValueError:
            raise ValueError(f"unknown zero family {s!r}") from None


@dataclass(frozen=True)
class ZeroTable:
    """Ordered positive zeros with a certified per-zero error bound.

    For ``HPRIME`` the entries live in the h-domain (squares of the scan
    variable), where the product expansion of h' is stated.
    """

    which: Which
    zeros: tuple
    accuracy: float
    params: MercerParams

    def __len__(self) -> int:
        return len(self.zeros)


def _scaled_sums(p: MercerParams, x):
    """(A, B) with A = x^-nu N(x) and B = x^(1-nu) N'(x), vectorized.

    Both are entire even functions of x, summed directly from the
    Q-weighted series so the origin needs no special handling.
    """
    a, b, c, nu = p.a, p.b, p.c, p.nu
    xx = np.asarray(x, dtype=float)
    u = xx * xx / 4.0
    umax = float(np.max(u))
    base = 2.0**-nu / math.gamma(nu + 1.0)
    asum = np.zeros_like(xx)
    bsum = np.zeros_like(xx)
    upow = np.ones_like(xx)
    coeff = base
    peak = 0.0
    for n in range(300):
        qn = _q(a, b, c, 2 * n + nu)
        term = coeff * qn * upow
        asum = asum + term
        bsum = bsum + (2 * n + nu) * term
        tmag = float(np.max(np.abs(term))) * (2 * n + nu + 1.0)
        peak = max(peak, tmag)
        if n >= 2 and tmag < 1e-17 * peak and umax / ((n + 1.0) * (n + 1.0 + nu)) < 0.4:
            break
        coeff = -coeff / ((n + 1.0) * (n + 1.0 + nu))
        upow = upow * u
    return asum, bsum


def _scaled_sums_mp(p: MercerParams, x: float):
    """Extended-precision (A, B) at scalar x, rounded back to float.

    Every factor is promoted to mpf before use: a double-rounded factor on
    an e^x sized term would reintroduce exactly the cancellation noise
    this code path exists to remove.
    """
    dps = 25 + int(0.46 * abs(x))
    with mp.workdps(dps):
        a, b, c, nu = (mp.mpf(v) for v in (p.a, p.b, p.c, p.nu))
        u = mp.mpf(x) ** 2 / 4
        coeff = mp.mpf(2) ** (-nu) / mp.gamma(nu + 1)
        upow = mp.mpf(1)
        asum = mp.mpf(0)
        bsum = mp.mpf(0)
        peak = mp.mpf(0)
        cutoff = mp.mpf(10) ** (-dps + 3)
        half = mp.mpf("0.5")
        for n in range(60 + int(1.6 * abs(x))):
            pn = 2 * n + nu
            qn = a * pn * (pn - 1) + b * pn + c
            term = coeff * qn * upow
            asum += term
            bsum += pn * term
            tmag = abs(term) * (pn + 1)
            peak = max(peak, tmag)
            if n >= 2 and tmag < cutoff * peak and u / ((n + 1) * (n + 1 + nu)) < half:
                break
            coeff = -coeff / ((n + 1) * (n + 1 + nu))
            upow *= u
        return float(asum), float(bsum)


def _combine(which: Which, nu: float, A, B):
    if which is Which.N:
        return A
    if which is Which.NPRIME:
        return B
    if which is Which.GPRIME:
        return (1.0 - nu) * A + B
    return (2.0 - nu) * A + B


def scaled_target(p: MercerParams, which: Which):
    """Scalar evaluator of the scaled zero-target in the scan variable."""

    def f(x: float) -> float:
        if abs(x) > MP_HORIZON:
            A, B = _scaled_sums_mp(p, x)
        else:
            A, B = _scaled_sums(p, float(x))
            A, B = float(A), float(B)
        return _combine(which, p.nu, A, B)

    return f


def _bisect_to(f, lo: float, hi: float, flo: float, width: float) -> tuple:
    """Shrink a sign-change bracket below ``width``; returns (lo, hi)."""
    for _ in range(200):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            half = width / 4.0
            return mid - half, mid + half
        if (fm > 0.0) == (flo > 0.0):
            lo = mid
        else:
            hi = mid
    return lo, hi


@functools.lru_cache(maxsize=512)
def find_zeros(
    p: MercerParams,
    which: Which,
    count: int,
    accuracy: float = 1e-10,
    x_max: float | None = None,
) -> ZeroTable:
    """First ``count`` positive zeros, each bracketed to ``accuracy``.

    The scan step never exceeds pi/4 (zero spacing of Bessel-type functions
    approaches pi); the first window is subdivided more finely so a small
    leading zero cannot be skipped.  Raises ScanExhausted if the scan limit
    (default 50 pi, in the scan variable) is reached first.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if accuracy <= 0.0:
        raise ValueError("accuracy must be positive")
    limit = DEFAULT_X_MAX if x_max is None else float(x_max)
    f = scaled_target(p, which)

    found = []
    widths = []
    step = _BASE_STEP
    # fine head protects against a first zero well below the base step
    grid_head = np.linspace(1e-9, step, 9)
    x_prev = None
    f_prev = None
    pending = list(grid_head)
    x_cursor = step
    while len(found) < count:
        if not pending:
            if x_cursor >= limit:
                raise ScanExhausted(
                    f"found {len(found)} of {count} zeros of {which.value} "
                    f"before x_max={limit:.6g}"
                )
            if len(found) >= 2:
                step = min(math.pi / 4.0, (found[-1] - found[-2]) / 3.0)
            nxt = min(x_cursor + 64 * step, limit)
            pending = list(np.arange(x_cursor + step, nxt + 0.5 * step, step))
            x_cursor = nxt
            if not pending:
                pending = [limit]
                x_cursor = limit
        x = pending.pop(0)
        fx = f(x)
        if f_prev is not None and (fx > 0.0) != (f_prev > 0.0):
            width = max(min(accuracy, 1e-12), 8.0 * np.finfo(float).eps * x)
            lo, hi = _bisect_to(f, x_prev, x, f_prev, width)
            root = 0.5 * (lo + hi)
            if which is Which.HPRIME:
                found.append(root * root)
                widths.append(hi * hi - lo * lo)
            else:
                found.append(root)
                widths.append(hi - lo)
        x_prev, f_prev = x, fx

    return ZeroTable(
        which=which,
        zeros=tuple(found[:count]),
        accuracy=max(widths[:count]) if widths else accuracy,
        params=p,
    )


def residuals(table: ZeroTable) -> list:
    """Scaled-target values at the tabulated zeros (scan variable)."""
    f = scaled_target(table.params, table.which)
    out = []
    for z in table.zeros:
        x = math.sqrt(z) if table.which is Which.HPRIME else z
        out.append(f(x))
    return out


def check_interlacing(t_n: ZeroTable, t_nprime: ZeroTable) -> bool:
    """True iff the chain z'_1 < z_1 < z'_2 < z_2 < ... holds entry-wise."""
    if t_n.params != t_nprime.params:
        raise ValueError("tables must share the same parameters")
    lam = t_n.zeros
    lamp = t_nprime.zeros
    if len(lam) < 2 or len(lamp) < 2:
        raise ValueError("need at least two zeros in each table")
    m = min(len(lam), len(lamp))
    for i in range(m):
        if not lamp[i] < lam[i]:
            return False
        if i + 1 < len(lamp) and not lam[i] < lamp[i + 1]:
            return False
    return True


def weierstrass_partial(
    p: MercerParams,
    which: Which,
    z: complex,
    n_terms: int,
    table: ZeroTable | None = None,
) -> complex:
    """Prefactor times the n_terms-term partial Hadamard product.

    For which=N this approximates N(z) itself; for which=NPRIME, N'(z).
    """
    if which not in (Which.N, Which.NPRIME):
        raise ValueError("product form only available for N and NPRIME")
    if table is None:
        table = find_zeros(p, which, n_terms)
    if len(table) < n_terms:
        raise ValueError("zero table has fewer entries than n_terms")
    zc = complex(z)
    q = p.q_at_nu
    scale = q / (2.0**p.nu * math.gamma(p.nu + 1.0))
    if which is Which.N:
        pref = scale * zc**p.nu
    else:
        pref = scale * p.nu * zc ** (p.nu - 1.0)
    prod = 1.0 + 0.0j
    for lam in table.zeros[:n_terms]:
        prod *= 1.0 - zc * zc / (lam * lam)
    return pref * prod


def rayleigh_sums(p: MercerParams, which: Which = Which.N) -> tuple:
    """(S1, S2) with Sk the sum of the -2k-th powers of the positive zeros.

    Read off the first two coefficients of the scaled even series via
    Newton's identities; used to bound or correct truncation tails of the
    partial-fraction and product expansions.
    """
    a, b, c, nu = p.a, p.b, p.c, p.nu
    q0 = _q(a, b, c, nu)
    q2 = _q(a, b, c, nu + 2.0)
    q4 = _q(a, b, c, nu + 4.0)
    if which is Which.N:
        c1 = -q2 / (4.0 * (nu + 1.0) * q0)
        c2 = q4 / (32.0 * (nu + 1.0) * (nu + 2.0) * q0)
    elif which is Which.NPRIME:
        if nu == 0.0:
            raise ValueError("NPRIME power sums need nu != 0")
        c1 = -(nu + 2.0) * q2 / (4.0 * (nu + 1.0) * nu * q0)
        c2 = (nu + 4.0) * q4 / (32.0 * (nu + 1.0) * (nu + 2.0) * nu * q0)
    else:
        raise ValueError("power sums implemented for N and NPRIME only")
    s1 = -c1
    s2 = c1 * c1 - 2.0 * c2
    return s1, s2
