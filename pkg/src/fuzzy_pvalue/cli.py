"""Command-line front end.

Subcommands ``curve``, ``pvalue``, ``ci`` and ``verify``.  Option values come
from, in decreasing priority: command-line flags, a ``key=value`` config file
given with ``--config``, built-in defaults.  Exit codes: 0 success, 1 usage
error, 2 computation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import svg
from .fuzzy import about_ten_curves, fmt, height
from .inference import (
    CURVE_POINTS,
    HYPOTHESIS_POINTS,
    NUISANCE_INTERVALS,
    THETA_HI,
    THETA_LO,
    THETA_TOL,
    BergerBoosConfig,
    HypothesisSet,
    bb_extended_pvalue,
    confidence_cut,
    extended_pvalue,
    grade_function,
    mu_curve,
)
from .nuisance import SupConfig
from .tail import TwoSampleData
from .validity import DEFAULT_OMEGA_POINTS, SampleSpaceTooLarge, verify

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, data: bool = True):
    if data:
        p.add_argument("-x", type=int, help="successes in arm 1")
        p.add_argument("-m", type=int, help="size of arm 1")
        p.add_argument("-y", type=int, help="successes in arm 2")
        p.add_argument("-n", type=int, help="size of arm 2")
    p.add_argument("--omega-grid", type=int, default=SupConfig.grid_points,
                   help="grid points for the nuisance maximization (default: %(default)s)")
    p.add_argument("--omega-tol", type=float, default=SupConfig.omega_tol,
                   help="golden-section resolution in omega (default: %(default)s)")
    p.add_argument("--berger-boos", action="store_true", help="use the Berger-Boos refinement")
    p.add_argument("--gamma", type=float, default=BergerBoosConfig.gamma,
                   help="Berger-Boos confidence-set level parameter (default: %(default)s)")
    p.add_argument("--interval", choices=NUISANCE_INTERVALS, default="wald",
                   help="confidence interval for the nuisance set (default: %(default)s)")
    p.add_argument("--output", "-o", default=None, help="output file (default: standard output)")
    p.add_argument("--config", default=None, help="key=value config file; flags override it")


def _add_theta_grid(p):
    p.add_argument("--theta-lo", type=float, default=THETA_LO, help="theta grid start (default: %(default)s)")
    p.add_argument("--theta-hi", type=float, default=THETA_HI, help="theta grid end (default: %(default)s)")
    p.add_argument("--grid", type=int, default=CURVE_POINTS, help="theta grid points (default: %(default)s)")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="worker processes for curve evaluation (default: available cores, %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzy-pvalue", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("curve", help="membership curve as CSV or JSON, optionally SVG")
    _add_common(p)
    _add_theta_grid(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format (default: %(default)s)")
    p.add_argument("--svg", default=None, help="also write an SVG plot to this path")
    p.add_argument("--alpha", type=float, default=None, help="draw a dashed line at this grade")
    p.add_argument("--h0", default=None, help="shade the hypothesis band lo:hi in the SVG")
    p.add_argument("--demo-fuzzy", action="store_true", help='emit the two triangular "about 10" sets')

    p = sub.add_parser("pvalue", help="p-value of H0: lo <= theta <= hi")
    _add_common(p)
    p.add_argument("--h0", required=False, default=None, help="hypothesis interval lo:hi")
    p.add_argument("--theta-points", type=int, default=HYPOTHESIS_POINTS,
                   help="theta grid points on the hypothesis interval (default: %(default)s)")
    p.add_argument("--theta-tol", type=float, default=THETA_TOL,
                   help="golden-section resolution in theta (default: %(default)s)")

    p = sub.add_parser("ci", help="confidence set as the strong alpha-cut of the curve")
    _add_common(p)
    _add_theta_grid(p)
    p.add_argument("--alpha", type=float, default=0.05, help="1 - confidence level (default: %(default)s)")

    p = sub.add_parser("verify", help="exhaustive validity and coverage check at small m, n")
    _add_common(p, data=False)
    p.add_argument("-m", type=int, help="size of arm 1")
    p.add_argument("-n", type=int, help="size of arm 2")
    p.add_argument("--omega-points", type=int, default=DEFAULT_OMEGA_POINTS,
                   help="interior omega points per theta (default: %(default)s)")
    p.add_argument("--force", action="store_true", help="override the sample-space size guard")
    return parser


def read_config(path: str) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def _subparser(parser, command):
    for action in parser._subparsers._group_actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[command]
    raise KeyError(command)


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sp = _subparser(parser, args.command)
        try:
            file_values = read_config(args.config)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
        known = {a.dest: a for a in sp._actions}
        defaults = {}
        for key, raw in file_values.items():
            if key not in known:
                raise UsageError(f"unknown config key {key!r}")
            action = known[key]
            if isinstance(action, argparse._StoreTrueAction):
                defaults[key] = raw.lower() in ("1", "true", "yes", "on")
            else:
                defaults[key] = action.type(raw) if action.type else raw
        sp.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def _data(args) -> TwoSampleData:
    missing = [k for k in ("x", "m", "y", "n") if getattr(args, k) is None]
    if missing:
        raise UsageError(f"missing data options: {', '.join('-' + k for k in missing)}")
    try:
        return TwoSampleData(args.x, args.m, args.y, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _configs(args):
    try:
        cfg = SupConfig(args.omega_grid, args.omega_tol)
        bb = BergerBoosConfig(args.gamma, args.interval)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cfg, bb


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _h0(text):
    try:
        return HypothesisSet.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_curve(args) -> int:
    if args.demo_fuzzy:
        a, b = about_ten_curves()
        lines = ["u,mu_a,mu_b"]
        lines += [f"{fmt(u)},{fmt(va)},{fmt(vb)}" for u, va, vb in zip(a.grid, a.values, b.values)]
        _write("\n".join(lines) + "\n", args.output)
        if args.svg:
            _write(svg.render([("A", a.grid, a.values), ("B", b.grid, b.values)],
                              title='"about 10"', xlabel="u", alpha_line=args.alpha), args.svg)
        return EXIT_OK

    data = _data(args)
    cfg, bb = _configs(args)
    band = _h0(args.h0) if args.h0 else None
    if args.alpha is not None and not 0 < args.alpha < 1:
        raise UsageError("--alpha must lie in (0, 1)")
    try:
        plain = mu_curve(data, args.theta_lo, args.theta_hi, args.grid, cfg, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    refined = mu_curve(data, args.theta_lo, args.theta_hi, args.grid, cfg, bb, args.workers) if args.berger_boos else None

    if args.format == "csv":
        header = "theta,mu,mu_bb" if refined is not None else "theta,mu"
        lines = [header]
        for i, t in enumerate(plain.grid):
            row = [fmt(t), fmt(plain.values[i])]
            if refined is not None:
                row.append(fmt(refined.values[i]))
            lines.append(",".join(row))
        text = "\n".join(lines) + "\n"
    else:
        obj = {
            "schema_version": 1,
            "data": {"x": data.x, "m": data.m, "y": data.y, "n": data.n},
            "omega_grid": cfg.grid_points,
            "omega_tol": cfg.omega_tol,
            "theta": plain.grid.tolist(),
            "mu": plain.values.tolist(),
        }
        if refined is not None:
            obj.update(gamma=bb.gamma, interval=bb.interval, mu_bb=refined.values.tolist())
        text = json.dumps(obj, indent=1) + "\n"
    _write(text, args.output)

    if args.svg:
        curves = [("mu", plain.grid, plain.values)]
        if refined is not None:
            curves.append(("mu_S", refined.grid, refined.values))
        title = f"x={data.x} m={data.m} y={data.y} n={data.n}"
        _write(svg.render(curves, title=title, alpha_line=args.alpha,
                          band=None if band is None else (band.lo, band.hi)), args.svg)
    return EXIT_OK


def cmd_pvalue(args) -> int:
    data = _data(args)
    cfg, bb = _configs(args)
    if not args.h0:
        raise UsageError("--h0 lo:hi is required")
    h = _h0(args.h0)
    if args.berger_boos:
        res = bb_extended_pvalue(data, h, bb, cfg, args.theta_points, args.theta_tol)
    else:
        res = extended_pvalue(data, h, cfg, args.theta_points, args.theta_tol)
    out = {
        "schema_version": 1,
        "theta_lo": res.theta_lo,
        "theta_hi": res.theta_hi,
        "p_value": res.p_value,
        "argmax_theta": res.refined_argmax,
        "variant": res.variant,
    }
    if args.berger_boos:
        out.update(gamma=bb.gamma, interval=bb.interval)
    _write(json.dumps(out, indent=1) + "\n", args.output)
    return EXIT_OK


def cmd_ci(args) -> int:
    data = _data(args)
    cfg, bb = _configs(args)
    if not 0 < args.alpha < 1:
        raise UsageError("--alpha must lie in (0, 1)")
    use_bb = bb if args.berger_boos else None
    try:
        curve = mu_curve(data, args.theta_lo, args.theta_hi, args.grid, cfg, use_bb, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cut = confidence_cut(curve, args.alpha, refine=grade_function(data, cfg, use_bb))
    out = {
        "schema_version": 1,
        "alpha": args.alpha,
        "level": 1.0 - args.alpha,
        "variant": "berger-boos" if args.berger_boos else "plain",
        "hull": None if cut.hull is None else list(cut.hull),
        "intervals": [list(iv) for iv in cut.intervals],
        "height": height(curve),
    }
    _write(json.dumps(out, indent=1) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.m is None or args.n is None:
        raise UsageError("verify needs -m and -n")
    if args.m < 1 or args.n < 1:
        raise UsageError("-m and -n must be >= 1")
    cfg, bb = _configs(args)
    try:
        report = verify(args.m, args.n, omega_points=args.omega_points, cfg=cfg,
                        bb=bb if args.berger_boos else None, force=args.force)
    except SampleSpaceTooLarge as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        _write(report.to_json() + "\n", args.output)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {"curve": cmd_curve, "pvalue": cmd_pvalue, "ci": cmd_ci, "verify": cmd_verify}


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fuzzy-pvalue: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fuzzy-pvalue: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"fuzzy-pvalue: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
