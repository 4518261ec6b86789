"""Command-line front end: verification runs, curve sampling, polynomial
inspection, and certificate I/O.

Subcommands: verify, curve, poly, certify.  Output files are deterministic:
fixed column order, shortest round-trip float formatting, LF line endings,
and a top-level "schema": 1 field on every JSON document.  Exit codes:
0 success, 1 usage or input error, 2 verification/verdict failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import curve as curve_mod
from . import solver
from .curve import Branch, CurvePoint, THETA_MAX, T_MAX
from .heis import HeisPoint

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; the CLI contract
    # reserves 2 for verification failures, so route usage errors to 1.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="koranyi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the theorem certification suite")
    p_verify.add_argument("--samples", type=int, default=2001,
                          help="t0 sweep size (>= 101)")
    p_verify.add_argument("--grid", type=int, default=1_000_000,
                          help="total cell budget for the 3D equidistant search")
    p_verify.add_argument("--format", choices=("csv", "json"), default="json")
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")
    p_verify.add_argument("--perturb-r0", type=float, default=0.0,
                          help=argparse.SUPPRESS)  # negative-control hook

    p_curve = sub.add_parser("curve", help="sample the unit-distance curve profile")
    p_curve.add_argument("--samples", type=int, default=512,
                         help="number of latitude rows (>= 2)")
    p_curve.add_argument("--format", choices=("csv", "json"), default="csv")
    p_curve.add_argument("--out", default=None)

    p_poly = sub.add_parser("poly", help="inspect the partner polynomial")
    p_poly.add_argument("--t0", type=float, default=None,
                        help="half-angle parameter of the fixed curve point")
    p_poly.add_argument("--boundary", action="store_true",
                        help="force the boundary cubic-factor branch")
    p_poly.add_argument("--samples", type=int, default=None,
                        help="sweep mode: emit the zero set over this many t0 values")
    p_poly.add_argument("--format", choices=("csv", "json"), default="json")
    p_poly.add_argument("--out", default=None)

    p_cert = sub.add_parser("certify", help="certify a point set from a file")
    p_cert.add_argument("points_file",
                        help="comma-separated re(z), im(z), t per row; # comments")
    p_cert.add_argument("--tol", type=float, default=1e-12)
    p_cert.add_argument("--out", default=None)

    return parser


def _write_text(out_path: str | None, text: str) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_sanitize(obj):
    """Replace non-finite floats with None; JSON has no representation for
    them and the output contract forbids the NaN/Infinity extensions."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _json_sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_sanitize(v) for v in obj]
    return obj


def _json_text(payload: dict) -> str:
    return json.dumps(_json_sanitize(payload), indent=2, allow_nan=False) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv_text(columns: list[str], rows: list[list]) -> str:
    lines = [",".join(columns)]
    lines += [",".join(_csv_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _finite_or_none(v: float):
    return v if math.isfinite(v) else None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.samples < 101:
        raise UsageError("--samples must be at least 101")
    if args.grid < 1000:
        raise UsageError("--grid must be at least 1000")
    report = solver.verify_theorems(
        samples=args.samples, grid_n=args.grid, radius_offset=args.perturb_r0
    )
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name} margin={check.margin!r} "
              f"({check.runtime_s:.2f}s)", file=sys.stderr)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "samples": args.samples,
        "grid": args.grid,
        **report.to_dict(),
    }
    if args.format == "json":
        _write_text(args.out, _json_text(payload))
    else:
        rows = [
            [c.name, "PASS" if c.passed else "FAIL", c.margin, c.runtime_s]
            for c in report.checks
        ]
        _write_text(args.out, _csv_text(["name", "status", "margin", "runtime_s"], rows))
    return 0 if report.all_passed else 2


_CURVE_COLUMNS = [
    "theta", "phi_plus", "phi_minus", "f", "f_prime", "h", "s", "v", "defect_plus",
]


def _curve_row(theta: float) -> list[float]:
    interior = abs(theta) < THETA_MAX
    f_prime = curve_mod.locus_cos_deriv(theta) if interior else math.nan
    try:
        defect = curve_mod.horizontality_defect(theta, Branch.PLUS)
    except ValueError:
        defect = math.nan
    return [
        theta,
        curve_mod.phi(theta, Branch.PLUS),
        curve_mod.phi(theta, Branch.MINUS),
        curve_mod.locus_cos(theta),
        f_prime,
        curve_mod.antipodal_dist4(theta),
        curve_mod.symmetric_dist4(theta),
        curve_mod.vertical_dist4(theta),
        defect,
    ]


def _cmd_curve(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    thetas = np.linspace(-THETA_MAX, THETA_MAX, args.samples)
    rows = [_curve_row(float(th)) for th in thetas]
    if args.format == "csv":
        _write_text(args.out, _csv_text(_CURVE_COLUMNS, rows))
    else:
        payload = {
            "schema": SCHEMA,
            "command": "curve",
            "columns": _CURVE_COLUMNS,
            "rows": [[_finite_or_none(v) for v in row] for row in rows],
        }
        _write_text(args.out, _json_text(payload))
    return 0


def _poly_sweep_t0(k: int, samples: int) -> float:
    ratio = (k + 1) / (samples + 1)
    return (2.0 * ratio - 1.0) * T_MAX


def _cmd_poly(args) -> int:
    if (args.t0 is None) == (args.samples is None):
        raise UsageError("poly needs exactly one of --t0 (single) or --samples (sweep)")

    if args.samples is not None:
        if args.samples < 2:
            raise UsageError("--samples must be at least 2")
        rows = []
        for k in range(args.samples):
            t0 = _poly_sweep_t0(k, args.samples)
            for root in solver.admissible_roots(t0):
                rows.append([t0, root])
        if args.format == "csv":
            _write_text(args.out, _csv_text(["t0", "t"], rows))
        else:
            payload = {
                "schema": SCHEMA,
                "command": "poly-sweep",
                "columns": ["t0", "t"],
                "rows": rows,
            }
            _write_text(args.out, _json_text(payload))
        return 0

    if args.format == "csv":
        raise UsageError("single-t0 poly output is JSON only")
    try:
        poly = solver.build_sextic(args.t0)
        roots = solver.admissible_roots(args.t0, boundary=args.boundary)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p0 = CurvePoint(2.0 * math.atan(args.t0), Branch.PLUS)
    partner_pts = solver._partners_from_roots(
        p0, roots, 1e-6 if args.boundary or (T_MAX - abs(args.t0)) <= 1e-9 else 1e-9
    )
    interior = not args.boundary and (T_MAX - abs(args.t0)) > 1e-9
    gap = solver.partner_gap(p0) if interior else None
    payload = {
        "schema": SCHEMA,
        "command": "poly",
        "t0": args.t0,
        "t_max": T_MAX,
        "boundary": not interior,
        "degree": poly.degree,
        "coefficients": list(poly.coeffs),
        "roots": roots,
        "partners": [
            {"theta": p.theta, "phi": p.phi, "branch": p.branch.name.lower()}
            for p in partner_pts
        ],
        "partner_gap": gap,
    }
    _write_text(args.out, _json_text(payload))
    return 0


def _read_points(path: str) -> list[HeisPoint]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    points = []
    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise UsageError(
                f"{path}: line {lineno}: expected 3 comma-separated values"
            )
        try:
            x, y, t = (float(p) for p in parts)
        except ValueError as exc:
            raise UsageError(f"{path}: line {lineno}: {exc}") from exc
        points.append(HeisPoint(complex(x, y), t))
    if len(points) < 2:
        raise UsageError(f"{path}: need at least two points")
    return points


def _cmd_certify(args) -> int:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    cert = solver.certify(_read_points(args.points_file), args.tol)
    payload = {"schema": SCHEMA, "command": "certify", **cert.to_dict()}
    _write_text(args.out, _json_text(payload))
    return 0 if cert.verdict else 2


_DISPATCH = {
    "verify": _cmd_verify,
    "curve": _cmd_curve,
    "poly": _cmd_poly,
    "certify": _cmd_certify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"koranyi: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"koranyi: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
