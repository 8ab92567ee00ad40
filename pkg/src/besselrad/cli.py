"""Command-line front end.

Subcommands: ``radius`` (single query), ``table`` (preset or JSON-config
sweeps), ``curve`` (boundary-scan CSV export), ``zeros`` (zero-table CSV
dump) and ``verify`` (self-check suite).  Exit codes: 0 success, 2 for
admissibility or configuration rejections, 3 for numerical failures.
Output is deterministic: identical flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import oracle, radii, reference, zeros
from .errors import (
    AdmissibilityError,
    BesselradError,
    BracketFailure,
    BranchCut,
    NonConvergent,
    ScanExhausted,
    SingularPoint,
)
from .mercer import Kind, MercerParams, n_nu
from .radii import ConvexPhi, ConvexSpirallike, RadiusQuery, Spirallike, StarPhi
from .targets import TargetFunction, beta_oracle
from .zeros import Which, check_interlacing, find_zeros

_NUMERICAL = (NonConvergent, BracketFailure, ScanExhausted, SingularPoint, BranchCut)

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_NUMERICAL = 3


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _build_problem(problem: str, alpha, gamma, phi_name):
    if problem in ("spiral", "convex-spiral"):
        if alpha is None or gamma is None:
            raise ValueError(f"problem {problem} needs --alpha and --gamma")
        cls = Spirallike if problem == "spiral" else ConvexSpirallike
        return cls(alpha=alpha, gamma=gamma)
    if problem in ("star-phi", "convex-phi"):
        if phi_name is None:
            raise ValueError(f"problem {problem} needs --phi")
        phi = TargetFunction.from_name(phi_name)
        cls = StarPhi if problem == "star-phi" else ConvexPhi
        return cls(phi=phi)
    raise ValueError(f"unknown problem {problem!r}")


def _query_from_args(args) -> RadiusQuery:
    params = MercerParams(a=args.a, b=args.b, c=args.c, nu=args.nu)
    kind = Kind.from_str(args.kind)
    problem = _build_problem(args.problem, args.alpha, args.gamma, args.phi)
    return RadiusQuery(params=params, kind=kind, problem=problem)


def cmd_radius(args) -> int:
    query = _query_from_args(args)
    result = radii.solve(query)
    verdict = "skipped"
    if not args.no_oracle:
        ok = radii.oracle_check(query, result.radius, n=args.oracle_n)
        verdict = "pass" if ok else "fail"
    line = (
        f"radius={_fmt(result.radius)} "
        f"bracket=({_fmt(result.bracket[0])},{_fmt(result.bracket[1])}) "
        f"residual={result.residual:.3e} oracle={verdict}"
    )
    if args.verbose:
        line += (
            f" iterations={result.iterations}"
            f" statement_residual={radii.statement_residual(query, result.radius):.3e}"
        )
    print(line)
    return EXIT_OK


def _load_sweep_config(args) -> dict:
    if args.preset:
        return reference.table_preset_config(args.preset)
    with open(args.config, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _sweep_rows(cfg: dict, oracle_n: int, run_oracle: bool):
    kinds = cfg.get("kinds", [])
    cells = cfg.get("cells", [])
    if not kinds or not cells:
        raise ValueError("sweep needs non-empty 'kinds' and 'cells'")
    nu = float(cfg["nu"])
    tol = float(cfg.get("tol", 1e-12))
    problem = _build_problem(
        cfg["problem"], cfg.get("alpha"), cfg.get("gamma"), cfg.get("phi")
    )
    rows = []
    for kind_name in kinds:
        kind = Kind.from_str(kind_name)
        for cell in cells:
            a, b, c = float(cell["a"]), float(cell["b"]), float(cell["c"])
            row = {"kind": kind.value, "a": a, "b": b, "c": c,
                   "radius": "", "residual": "", "oracle": "", "status": "ok"}
            try:
                params = MercerParams(a=a, b=b, c=c, nu=nu)
                query = RadiusQuery(params=params, kind=kind, problem=problem)
            except (AdmissibilityError, ValueError) as exc:
                row["status"] = f"skipped: {exc}"
                rows.append(row)
                continue
            try:
                result = radii.solve(query, tol=tol)
                row["radius"] = _fmt(result.radius)
                row["residual"] = f"{result.residual:.3e}"
                if run_oracle:
                    ok = radii.oracle_check(query, result.radius, n=oracle_n)
                    row["oracle"] = "pass" if ok else "fail"
            except _NUMERICAL as exc:
                row["status"] = f"failed: {exc}"
            rows.append(row)
    return rows


def _emit_rows(rows, fmt: str, out_path):
    if fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = ["kind,a,b,c,radius,residual,oracle,status"]
        for r in rows:
            lines.append(
                f"{r['kind']},{_fmt(r['a'])},{_fmt(r['b'])},{_fmt(r['c'])},"
                f"{r['radius']},{r['residual']},{r['oracle']},\"{r['status']}\""
            )
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    cfg = _load_sweep_config(args)
    rows = _sweep_rows(cfg, args.oracle_n, not args.no_oracle)
    _emit_rows(rows, args.format, args.out)
    return EXIT_OK


def cmd_curve(args) -> int:
    if args.preset:
        preset = dict(reference.FIGURE_PRESETS[args.preset])
        r = args.r if args.r is not None else preset["default_r"]
        params = MercerParams(preset["a"], preset["b"], preset["c"], preset["nu"])
        kind = Kind.from_str(preset["kind"])
        problem = _build_problem(
            preset["problem"], preset.get("alpha"), preset.get("gamma"), preset.get("phi")
        )
    else:
        if args.r is None:
            raise ValueError("--r is required without a preset")
        r = args.r
        params = MercerParams(args.a, args.b, args.c, args.nu)
        kind = Kind.from_str(args.kind)
        problem = _build_problem(args.problem, args.alpha, args.gamma, args.phi)

    if isinstance(problem, ConvexSpirallike):
        scan = oracle.scan_convex_spirallike(params, kind, r, problem.alpha, problem.gamma, args.n)
    elif isinstance(problem, Spirallike):
        scan = oracle.scan_spirallike(params, kind, r, problem.alpha, problem.gamma, args.n)
    else:
        mode = oracle.Mode.CONVEX if isinstance(problem, ConvexPhi) else oracle.Mode.STAR
        scan = oracle.scan_phi_membership(params, kind, r, problem.phi, mode, args.n)

    theta, curve = oracle.downsample_curve(scan)
    lines = ["theta,re,im"]
    for t, w in zip(theta, curve):
        lines.append(f"{_fmt(t)},{_fmt(w.real)},{_fmt(w.imag)}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(
        f"# r={_fmt(r)} min_margin={_fmt(scan.min_margin)} "
        f"argmin_angle={_fmt(scan.argmin_angle)}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_zeros(args) -> int:
    params = MercerParams(args.a, args.b, args.c, args.nu)
    which = Which.from_str(args.which)
    table = find_zeros(params, which, args.count, args.accuracy, x_max=args.x_max)
    res = zeros.residuals(table)
    lines = ["index,zero,residual"]
    for i, (z, rv) in enumerate(zip(table.zeros, res), start=1):
        lines.append(f"{i},{_fmt(z)},{rv:.3e}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _n_half_closed(a: float, b: float, c: float, z: complex) -> complex:
    """Trigonometric closed form of N at nu = 1/2 (independent check)."""
    z = complex(z)
    num = 4.0 * (b - a) * z * np.cos(z) + (a * (3.0 - 4.0 * z * z) - 2.0 * b + 4.0 * c) * np.sin(z)
    return num / (2.0 * np.sqrt(2.0 * np.pi) * np.sqrt(z))


def _verify_checks(quick: bool):
    checks = []

    def closed_form():
        for (a, b, c) in ((1.0, 2.0, 0.0), (1.0, 2.0, 3.0)):
            p = MercerParams(a, b, c, 0.5)
            xs = np.linspace(0.15, 10.0, 20 if quick else 60)
            worst = max(
                abs(n_nu(p, complex(x)) - _n_half_closed(a, b, c, x)) for x in xs
            )
            if worst > 1e-10:
                return False, f"max deviation {worst:.2e}"
        return True, "series vs trig closed form at nu=1/2"

    checks.append(("closed-form", closed_form))

    def interlacing():
        cases = [(1.0, 2.0, 0.0, 0.5), (1.0, 3.0, 0.0, 2.0), (2.0, 3.0, 1.5, 1.0)]
        count = 6 if quick else 10
        for (a, b, c, nu) in cases:
            p = MercerParams(a, b, c, nu)
            tn = find_zeros(p, Which.N, count)
            tnp = find_zeros(p, Which.NPRIME, count)
            if not check_interlacing(tn, tnp):
                return False, f"chain broken for (a,b,c,nu)=({a},{b},{c},{nu})"
        return True, f"zero interlacing, {len(cases)} parameter sets"

    checks.append(("interlacing", interlacing))

    def cross_family():
        p = MercerParams(1.0, 2.0, 0.0, 0.5)
        for alpha in (0.0, 0.25, 0.5):
            for kind in (Kind.F, Kind.G, Kind.H):
                r1 = radii.spirallike_radius(
                    RadiusQuery(p, kind, Spirallike(alpha, 0.0))
                ).radius
                phi = TargetFunction(kind="janowski", A=1.0 - 2.0 * alpha, B=-1.0)
                r2 = radii.maminda_starlike_radius(
                    RadiusQuery(p, kind, StarPhi(phi))
                ).radius
                if abs(r1 - r2) > 1e-7:
                    return False, f"alpha={alpha} kind={kind.value}: {r1} vs {r2}"
        return True, "spiral(gamma=0) matches the half-plane subordination radius"

    checks.append(("cross-family", cross_family))

    def beta_catalog():
        names = ["janowski:1:-1", "sl", "sqrt1p", "exp", "crescent", "sigmoid",
                 "sine", "bell", "conic:0", "conic:0.5", "conic:1"]
        if not quick:
            names.append("conic:2")
        for name in names:
            phi = TargetFunction.from_name(name)
            got = beta_oracle(phi, 1024)
            if abs(got - phi.beta) > 1e-5:
                return False, f"{name}: closed {phi.beta} vs oracle {got}"
        return True, f"beta closed forms vs boundary oracle ({len(names)} targets)"

    checks.append(("beta-catalog", beta_catalog))

    def tables():
        presets = list(reference.REFERENCE_RADII)
        worst = 0.0
        for preset in presets:
            cfg = reference.table_preset_config(preset)
            expected = reference.REFERENCE_RADII[preset]
            nu = cfg["nu"]
            problem = _build_problem(
                cfg["problem"], cfg.get("alpha"), cfg.get("gamma"), cfg.get("phi")
            )
            cols = range(2) if quick else range(len(reference.TABLE_COLUMNS))
            for kind_name in ("f", "g", "h"):
                for j in cols:
                    a, b, c = reference.TABLE_COLUMNS[j]
                    p = MercerParams(a, b, c, nu)
                    q = RadiusQuery(p, Kind.from_str(kind_name), problem)
                    got = radii.solve(q).radius
                    dev = abs(got - expected[kind_name][j])
                    worst = max(worst, dev)
                    if dev > reference.REFERENCE_TOL:
                        return False, (
                            f"{preset} {kind_name} (a,b,c)=({a},{b},{c}): "
                            f"{got:.6f} vs {expected[kind_name][j]}"
                        )
        return True, f"reference radii reproduced, worst deviation {worst:.2e}"

    checks.append(("tables", tables))
    return checks


def cmd_verify(args) -> int:
    failures = 0
    for name, fn in _verify_checks(args.quick):
        try:
            ok, detail = fn()
        except BesselradError as exc:
            ok, detail = False, f"error: {exc}"
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            failures += 1
    print(f"{'all checks passed' if failures == 0 else f'{failures} check(s) failed'}")
    return EXIT_OK if failures == 0 else 1


def _add_params(sp) -> None:
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--nu", type=float, required=True)


def _add_problem(sp, required: bool) -> None:
    sp.add_argument("--kind", choices=["f", "g", "h"], required=required)
    sp.add_argument(
        "--problem",
        choices=["spiral", "convex-spiral", "star-phi", "convex-phi"],
        required=required,
    )
    sp.add_argument("--alpha", type=float, help="order, in [0,1)")
    sp.add_argument("--gamma", type=float, help="tilt angle in radians, |gamma| < pi/2")
    sp.add_argument("--phi", help="target name, e.g. exp, crescent, janowski:1:-1, conic:2")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="besselrad")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("radius", help="solve a single radius query")
    _add_params(sp)
    _add_problem(sp, required=True)
    sp.add_argument("--no-oracle", action="store_true")
    sp.add_argument("--oracle-n", type=int, default=1024)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("table", help="sweep a table preset or JSON config")
    sp.add_argument("--preset", choices=sorted(reference.TABLE_PROBLEMS))
    sp.add_argument("--config", help="path to a JSON sweep configuration")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--no-oracle", action="store_true")
    sp.add_argument("--oracle-n", type=int, default=512)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("curve", help="export a boundary-scan curve as CSV")
    sp.add_argument("--preset", choices=sorted(reference.FIGURE_PRESETS))
    sp.add_argument("--a", type=float)
    sp.add_argument("--b", type=float)
    sp.add_argument("--c", type=float)
    sp.add_argument("--nu", type=float)
    _add_problem(sp, required=False)
    sp.add_argument("--r", type=float, help="circle radius")
    sp.add_argument("--n", type=int, default=4096)
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("zeros", help="dump a zero table as CSV")
    _add_params(sp)
    sp.add_argument("--which", choices=["n", "nprime", "gprime", "hprime"], default="n")
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--accuracy", type=float, default=1e-10)
    sp.add_argument("--x-max", type=float, default=None, help="scan limit (default 50 pi)")
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("verify", help="run the self-check suite")
    sp.add_argument("--quick", action="store_true")
    sp.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code = args.func(args)
    except (AdmissibilityError,) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except _NUMERICAL as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return code


if __name__ == "__main__":
    sys.exit(main())
