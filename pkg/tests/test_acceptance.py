"""Acceptance suite: one test per criterion, printing a pass/fail line each.

Criteria: reproduction of the four bundled reference tables to 5e-4,
two-sided oracle verification of every cell, zero interlacing on random
admissible draws, the nu = 1/2 closed form, the disk-radius catalog, the
half-plane reduction consistency, and the exported figure data.
"""

import csv
import math
import subprocess
import sys
import time

import numpy as np

from besselrad import radii
from besselrad.mercer import Kind, MercerParams, _largest_real_root, n_nu
from besselrad.radii import ConvexPhi, ConvexSpirallike, RadiusQuery, Spirallike, StarPhi
from besselrad.reference import (
    GAMMA_THIRD_PI,
    REFERENCE_RADII,
    REFERENCE_TOL,
    TABLE_COLUMNS,
    TABLE_NU,
)
from besselrad.targets import TargetFunction, beta_oracle
from besselrad.zeros import Which, check_interlacing, find_zeros

PROBLEMS = {
    "table1": Spirallike(0.5, GAMMA_THIRD_PI),
    "table2": ConvexSpirallike(0.5, GAMMA_THIRD_PI),
    "table3": StarPhi(TargetFunction.from_name("exp")),
    "table4": ConvexPhi(TargetFunction.from_name("crescent")),
}

_solved: dict = {}


def solve_table(name):
    if name not in _solved:
        cells = {}
        for kind_name in ("f", "g", "h"):
            for j, (a, b, c) in enumerate(TABLE_COLUMNS):
                q = RadiusQuery(
                    MercerParams(a, b, c, TABLE_NU),
                    Kind.from_str(kind_name),
                    PROBLEMS[name],
                )
                cells[(kind_name, j)] = (q, radii.solve(q).radius)
        _solved[name] = cells
    return _solved[name]


def reproduce_table(name):
    t0 = time.perf_counter()
    cells = solve_table(name)
    elapsed = time.perf_counter() - t0
    worst = 0.0
    for (kind_name, j), (_, radius) in cells.items():
        dev = abs(radius - REFERENCE_RADII[name][kind_name][j])
        worst = max(worst, dev)
    return worst, elapsed


def report(criterion, ok, detail):
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


def test_c01_table1_reproduction():
    worst, elapsed = reproduce_table("table1")
    ok = worst <= REFERENCE_TOL and elapsed < 10.0
    report(1, ok, f"spiral table worst |dev| = {worst:.2e}, {elapsed:.1f} s")


def test_c02_table2_reproduction():
    worst, _ = reproduce_table("table2")
    report(2, worst <= REFERENCE_TOL, f"convex spiral table worst |dev| = {worst:.2e}")


def test_c03_table3_reproduction():
    worst, _ = reproduce_table("table3")
    beyond_unit = solve_table("table3")[("h", 8)][1]
    ok = worst <= REFERENCE_TOL and abs(beyond_unit - 1.0559) <= REFERENCE_TOL
    report(3, ok, f"exp-starlike table worst |dev| = {worst:.2e}, h(1,2,4) = {beyond_unit:.4f}")


def test_c04_table4_reproduction():
    worst, _ = reproduce_table("table4")
    report(4, worst <= REFERENCE_TOL, f"crescent-convex table worst |dev| = {worst:.2e}")


def test_c05_oracle_two_sidedness():
    bad = []
    for name in PROBLEMS:
        for (kind_name, j), (q, radius) in solve_table(name).items():
            if not radii.oracle_check(q, radius, n=4096, inner=0.999, outer=1.01):
                bad.append((name, kind_name, TABLE_COLUMNS[j]))
    report(5, not bad, f"{4 * 27 - len(bad)}/108 cells two-sided at n=4096" +
           (f"; failing: {bad}" if bad else ""))


def test_c06_interlacing_random_draws():
    rng = np.random.default_rng(20260810)
    failures = 0
    for _ in range(20):
        a = rng.uniform(0.3, 3.0)
        b = a + rng.uniform(0.25, 2.5)
        c = 0.0 if rng.random() < 0.5 else rng.uniform(0.3, 4.0)
        root = _largest_real_root(a, b, c)
        low = max(0.0, root) if root is not None else 0.0
        nu = min(low + rng.uniform(0.05, 4.5), 5.0)
        p = MercerParams(a, b, c, nu)
        tn = find_zeros(p, Which.N, 10, 1e-10)
        tnp = find_zeros(p, Which.NPRIME, 10, 1e-10)
        if not check_interlacing(tn, tnp):
            failures += 1
    report(6, failures == 0, f"{20 - failures}/20 draws interlace, 10 zeros at 1e-10")


def test_c07_half_order_closed_form():
    worst = 0.0
    for (a, b, c) in ((1.0, 2.0, 0.0), (2.0, 3.0, 0.0), (1.0, 2.0, 4.0)):
        p = MercerParams(a, b, c, 0.5)
        for x in np.linspace(0.1, 10.0, 100):
            x = float(x)
            num = 4 * (b - a) * x * math.cos(x) + (a * (3 - 4 * x * x) - 2 * b + 4 * c) * math.sin(x)
            closed = num / (2.0 * math.sqrt(2.0 * math.pi) * math.sqrt(x))
            worst = max(worst, abs(n_nu(p, complex(x)) - closed))
    report(7, worst < 1e-10, f"series vs trig closed form, worst |dev| = {worst:.2e}")


def test_c08_beta_catalog():
    names = ["janowski:1:-1", "janowski:0.6:-0.3", "sl", "sqrt1p", "exp", "crescent",
             "sigmoid", "sine", "bell", "conic:0", "conic:0.5", "conic:1", "conic:2"]
    worst = 0.0
    for name in names:
        phi = TargetFunction.from_name(name)
        worst = max(worst, abs(phi.beta - beta_oracle(phi, 4096)))
    report(8, worst < 1e-5, f"{len(names)} targets, worst closed-vs-oracle |dev| = {worst:.2e}")


def test_c09_reduction_consistency():
    p = MercerParams(1.0, 2.0, 0.0, 0.5)
    worst = 0.0
    for alpha in (0.0, 0.25, 0.5):
        for kind in (Kind.F, Kind.G, Kind.H):
            r1 = radii.solve(RadiusQuery(p, kind, Spirallike(alpha, 0.0))).radius
            phi = TargetFunction(kind="janowski", A=1.0 - 2.0 * alpha, B=-1.0)
            r2 = radii.solve(RadiusQuery(p, kind, StarPhi(phi))).radius
            worst = max(worst, abs(r1 - r2))
    report(9, worst < 1e-7, f"spiral(gamma=0) vs half-plane radii, worst |dev| = {worst:.2e}")


def test_c10_figure_data(tmp_path):
    beta = TargetFunction.from_name("exp").beta

    def max_dist(r):
        out = tmp_path / f"curve_{r}.csv"
        res = subprocess.run(
            [sys.executable, "-m", "besselrad.cli", "curve", "--preset", "fig2",
             "--r", str(r), "--out", str(out)],
            capture_output=True, text=True,
        )
        assert res.returncode == 0, res.stderr
        rows = list(csv.DictReader(out.open()))
        return max(abs(complex(float(w["re"]), float(w["im"])) - 1.0) for w in rows)

    at_radius = max_dist(0.3571)
    outside = max_dist(0.48)
    ok = at_radius <= beta + 1e-4 and outside > beta
    report(10, ok, f"max|w-1| = {at_radius:.6f} at r=0.3571 (beta={beta:.6f}), "
                   f"{outside:.6f} at r=0.48")
