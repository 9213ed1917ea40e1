"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 numerical failure of the
elimination pipeline, 3 unsupported structure, 4 leg-length check failed.
"""
import argparse
import csv
import io
import json
import sys

import numpy as np

from . import document
from .errors import NotSupported, SolverError
from .geometry import MechanismGeometry, PoseParams, platform_points
from .oracle import OracleGrid, multistart
from .polyroots import TOL_REAL, classify_real
from .solver import solve
from .tricept import TriceptType1Geometry, TriceptType2Geometry, mirror_pairs, solve_type2

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_UNSUPPORTED, EXIT_CHECK = 0, 1, 2, 3, 4


def fmt(x):
    """16 significant digits; exact zero prints as ``0.``."""
    x = float(x)
    if x == 0.0:
        return "0."
    s = format(x, ".16g")
    return s if any(ch in s for ch in ".einf") else s + "."


def _signed(value, upper_positive):
    return ("± " if upper_positive else "∓ ") + fmt(abs(value))


def _root_rows(roots, tol_real, real_only):
    """Report rows: real roots ascending, then conjugate pairs."""
    reals, pairs = classify_real(roots, tol_real)
    rows = [(str(i + 1), f"({fmt(r)}, 0.)") for i, r in enumerate(reals)]
    if not real_only:
        n = len(reals)
        for k, (r, _) in enumerate(pairs):
            label = f"{n + 2 * k + 1}-{n + 2 * k + 2}"
            rows.append((label, f"({fmt(r.real)}, ± {fmt(abs(r.imag))})"))
    return rows


def _config_lines(index, c):
    lines = [f"{index}\t(sigma, theta1, theta2)\t({fmt(c.sigma)}, {fmt(c.theta1_deg)}, {fmt(c.theta2_deg)})"]
    for j, b in enumerate(c.platform_world, start=1):
        lines.append(f"\tB{j}\t({fmt(b[0])}, {fmt(b[1])}, {fmt(b[2])})")
    return lines


def _config_record(c):
    return {
        "sigma": c.sigma,
        "theta1_deg": c.theta1_deg,
        "theta2_deg": c.theta2_deg,
        "B": c.platform_world.tolist(),
        "residual_max": c.residual_max,
        "refined": c.refined,
        "source": c.source,
    }


def _diagnostics_record(sol):
    d = sol.diagnostics
    keys = ("collapse_ratio", "holdout_error", "odd_ratio", "imag_ratio", "root_method")
    out = {k: d[k] for k in keys if k in d}
    out["roots"] = [{k: v for k, v in r.items()} for r in d.get("roots", [])]
    return out


def _csv_rows(sol, tol_real, real_only, squares=False):
    rows = []
    if squares:
        for i, s in enumerate(sol.sigma_squared, start=1):
            rows.append(["sigma2", i, repr(float(s.real)), repr(float(s.imag))] + [""] * 11)
    reals, pairs = classify_real(sol.roots, tol_real)
    values = [complex(r) for r in reals]
    if not real_only:
        values += [z for pair in pairs for z in pair]
    for i, z in enumerate(values, start=1):
        rows.append(["root", i, repr(z.real), repr(z.imag)] + [""] * 11)
    for i, c in enumerate(sol.configurations, start=1):
        rows.append(["config", i, repr(c.sigma), "0.0", repr(c.theta1_deg), repr(c.theta2_deg)]
                    + [repr(float(v)) for v in c.platform_world.ravel()])
    return rows


CSV_HEADER = ["record", "index", "sigma_re", "sigma_im", "theta1_deg", "theta2_deg"] + [
    f"B{j}{ax}" for j in (1, 2, 3) for ax in "xyz"]


def _write_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def render_solve(sol, fmt_name="table", tol_real=TOL_REAL, real_only=False):
    if fmt_name == "json":
        reals, pairs = classify_real(sol.roots, tol_real)
        roots = [[r, 0.0] for r in reals]
        if not real_only:
            roots += [[z.real, z.imag] for pair in pairs for z in pair]
        doc = {"roots": roots,
               "configurations": [_config_record(c) for c in sol.configurations],
               "diagnostics": _diagnostics_record(sol)}
        return json.dumps(doc, indent=2, default=float) + "\n"
    if fmt_name == "csv":
        return _write_csv(_csv_rows(sol, tol_real, real_only))
    rows = _root_rows(sol.roots, tol_real, real_only)
    out = [f"Roots sigma_i of the degree-{sol.polynomial.degree} polynomial (real and imaginary parts)",
           "Root #\tRoot value"]
    out += [f"{a}\t{b}" for a, b in rows]
    out += ["", f"Real assembly configurations: {len(sol.configurations)} "
                "(angles in degrees, B_i in the base frame)"]
    for i, c in enumerate(sol.configurations, start=1):
        out += _config_lines(i, c)
    return "\n".join(out) + "\n"


def render_tricept(sol, fmt_name="table", tol_real=TOL_REAL):
    if fmt_name == "json":
        doc = {"sigma_squared": [[s.real, s.imag] for s in sol.sigma_squared],
               "configurations": [_config_record(c) for c in sol.configurations],
               "diagnostics": _diagnostics_record(sol)}
        return json.dumps(doc, indent=2, default=float) + "\n"
    if fmt_name == "csv":
        return _write_csv(_csv_rows(sol, tol_real, False, squares=True))
    out = ["Values of sigma^2 (real and imaginary parts)", "Value #\tValue"]
    out += [f"{a}\t{b}" for a, b in _root_rows(sol.sigma_squared, tol_real, False)]
    out += ["", f"Real assembly configurations: {len(sol.configurations)} "
                "(mirror pairs share a row; upper signs give the positive-sigma member)"]
    row = 1
    for upper, lower in mirror_pairs(sol):
        if lower is None:
            out += _config_lines(str(row), upper)
            row += 1
            continue
        out.append(f"{row}-{row + 1}\t(sigma, theta1, theta2)\t("
                   f"{_signed(upper.sigma, upper.sigma >= 0)}, "
                   f"{_signed(upper.theta1_deg, upper.theta1_deg >= 0)}, "
                   f"{_signed(upper.theta2_deg, upper.theta2_deg >= 0)})")
        for j, b in enumerate(upper.platform_world, start=1):
            out.append(f"\tB{j}\t({fmt(b[0])}, {fmt(b[1])}, {_signed(b[2], b[2] >= 0)})")
        row += 2
    return "\n".join(out) + "\n"


def _load(path):
    return document.load(path)


def cmd_solve(args):
    geom = _load(args.input)
    if isinstance(geom, TriceptType1Geometry):
        raise NotSupported("type-I Tricept structures cannot be solved by this procedure")
    if isinstance(geom, TriceptType2Geometry):
        geom = geom.to_general()
    sol = solve(geom, tol_real=args.tol_real, refine=not args.no_refine)
    sys.stdout.write(render_solve(sol, args.format, args.tol_real, args.real_only))
    return EXIT_OK


def cmd_tricept(args):
    geom = _load(args.input)
    if isinstance(geom, MechanismGeometry):
        raise document.DocumentError("the tricept command needs a [tricept2] table")
    sol = solve_type2(geom, tol_real=args.tol_real, refine=not args.no_refine)
    sys.stdout.write(render_tricept(sol, args.format, args.tol_real))
    return EXIT_OK


def cmd_check(args):
    geom = _load(args.input)
    if not isinstance(geom, MechanismGeometry):
        geom = geom.to_general()
    pose = PoseParams.from_degrees(args.theta1, args.theta2, args.sigma)
    lengths = np.linalg.norm(platform_points(pose, geom) - geom.base_anchors, axis=1)
    residual = lengths - geom.leg_lengths
    out = ["leg\t|B-A|\tL\tresidual"]
    for j in range(3):
        out.append(f"{j + 1}\t{fmt(lengths[j])}\t{fmt(geom.leg_lengths[j])}\t{fmt(residual[j])}")
    passed = bool(np.all(np.abs(residual) <= args.tol))
    out.append("PASS" if passed else "FAIL")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK if passed else EXIT_CHECK


def _parse_grid(text):
    try:
        a, b, c = (int(v) for v in text.lower().split("x"))
    except ValueError as exc:
        raise document.DocumentError(f"--seed-grid expects NxNxM, got {text!r}") from exc
    return OracleGrid(a, b, c)


def cmd_oracle(args):
    geom = _load(args.input)
    if not isinstance(geom, MechanismGeometry):
        geom = geom.to_general()
    points = multistart(geom, _parse_grid(args.seed_grid))
    if args.format == "json":
        doc = [{"sigma": s, "theta1_deg": float(np.rad2deg(t1)), "theta2_deg": float(np.rad2deg(t2))}
               for t1, t2, s in points]
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    out = [f"Real solutions found by multistart Newton: {len(points)}", "#\tsigma\ttheta1\ttheta2"]
    for i, (t1, t2, s) in enumerate(points, start=1):
        out.append(f"{i}\t{fmt(s)}\t{fmt(np.rad2deg(t1))}\t{fmt(np.rad2deg(t2))}")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="rrpss", description=
                                     "Assembly configurations of RRP-3(SS) structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("table", "json", "csv")):
        p.add_argument("input", help="geometry file (TOML)")
        p.add_argument("--format", choices=formats, default="table")

    p = sub.add_parser("solve", help="all configurations of a general structure")
    common(p)
    p.add_argument("--real-only", action="store_true", help="omit complex roots")
    p.add_argument("--tol-real", type=float, default=TOL_REAL)
    p.add_argument("--no-refine", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tricept", help="type-II Tricept forward kinematics")
    common(p)
    p.add_argument("--tol-real", type=float, default=TOL_REAL)
    p.add_argument("--no-refine", action="store_true")
    p.set_defaults(func=cmd_tricept)

    p = sub.add_parser("check", help="leg-length closure at a given pose")
    p.add_argument("input")
    p.add_argument("--theta1", type=float, required=True, help="degrees")
    p.add_argument("--theta2", type=float, required=True, help="degrees")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="multistart Newton cross-check")
    common(p, ("table", "json"))
    p.add_argument("--seed-grid", default="24x24x21")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, document.DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotSupported as exc:
        print(f"not supported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except SolverError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
