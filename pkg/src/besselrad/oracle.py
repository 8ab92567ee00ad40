"""Brute-force membership verification by dense boundary sampling.

The scans evaluate the defining expression of each class on the full
circle |z| = r and reduce to the worst margin.  For the subordination
classes the disk criterion |expr - 1| < beta is used; it is exactly the
criterion the radius equations are sharp for (sharpness is attained on the
negative real axis), and it avoids inverting the target map.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .mercer import Kind, MercerParams, convexity_expr, log_deriv
from .targets import TargetFunction


class Mode(enum.Enum):
    STAR = "star"
    CONVEX = "convex"


@dataclass(frozen=True)
class BoundaryScan:
    """Worst-case margin over one sampled circle.

    ``curve`` holds the sampled values of the scanned expression;
    membership holds iff ``min_margin`` > 0.
    """

    r: float
    n_samples: int
    min_margin: float
    argmin_angle: float
    curve: np.ndarray

    def __post_init__(self) -> None:
        if self.n_samples < 256:
            raise ValueError("need at least 256 boundary samples")
        if len(self.curve) != self.n_samples:
            raise ValueError("curve length must equal n_samples")


def _circle(r: float, n: int) -> tuple:
    theta = np.arange(n) * (2.0 * math.pi / n)
    return theta, r * np.exp(1j * theta)


def scan_spirallike(
    p: MercerParams, kind: Kind, r: float, alpha: float, gamma: float, n: int = 4096
) -> BoundaryScan:
    """Margin of Re(e^{-i gamma} z w'/w) over alpha cos gamma on |z| = r."""
    theta, z = _circle(r, n)
    w = np.exp(-1j * gamma) * log_deriv(p, kind, z)
    margins = w.real - alpha * math.cos(gamma)
    j = int(np.argmin(margins))
    return BoundaryScan(r, n, float(margins[j]), float(theta[j]), w)


def scan_convex_spirallike(
    p: MercerParams, kind: Kind, r: float, alpha: float, gamma: float, n: int = 4096
) -> BoundaryScan:
    """Same as scan_spirallike with 1 + z w''/w' in place of z w'/w."""
    theta, z = _circle(r, n)
    w = np.exp(-1j * gamma) * convexity_expr(p, kind, z)
    margins = w.real - alpha * math.cos(gamma)
    j = int(np.argmin(margins))
    return BoundaryScan(r, n, float(margins[j]), float(theta[j]), w)


def disk_margin(
    p: MercerParams, kind: Kind, r: float, m: float, mode: Mode, n: int = 4096
) -> BoundaryScan:
    """Disk-criterion margin m - max |expr - 1| on |z| = r.

    This is the criterion all the radius equations are exactly two-sided
    for; for the tilted half-plane problems m = (1-alpha) cos gamma is the
    largest disk centered at 1 inside the half-plane.  Ties in the maximum
    (the f/g expressions are even in z) resolve toward theta = pi, where
    the sharpness arguments place the extremal point; for the h
    normalization the maximum genuinely sits at theta = 0.
    """
    theta, z = _circle(r, n)
    expr = convexity_expr if mode is Mode.CONVEX else log_deriv
    w = expr(p, kind, z)
    dist = np.abs(w - 1.0)
    dmax = float(np.max(dist))
    near = np.where(dist >= dmax - 1e-9 * (1.0 + dmax))[0]
    j = int(near[np.argmin(np.abs(theta[near] - math.pi))])
    return BoundaryScan(r, n, float(m - dmax), float(theta[j]), w)


def scan_phi_membership(
    p: MercerParams,
    kind: Kind,
    r: float,
    phi: TargetFunction,
    mode: Mode,
    n: int = 4096,
) -> BoundaryScan:
    """Disk-criterion margin beta - max |expr - 1| on |z| = r."""
    return disk_margin(p, kind, r, phi.beta, mode, n)


def downsample_curve(scan: BoundaryScan, keep: int = 1024) -> tuple:
    """(theta, values) thinned to at most ``keep`` points for export."""
    n = scan.n_samples
    theta = np.arange(n) * (2.0 * math.pi / n)
    if n <= keep:
        return theta, scan.curve
    stride = n // keep
    return theta[::stride][:keep], scan.curve[::stride][:keep]
