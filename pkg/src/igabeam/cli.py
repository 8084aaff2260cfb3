"""Command-line driver.

Subcommands:
    analyze   one free-vibration analysis, frequency parameters to stdout/CSV
    table     reproduce benchmark table 1 (pinned-pinned) or 2 (clamped-clamped)
    converge  refinement sweep over element counts
    modes     export sampled mode shapes, one CSV per mode

Exit codes: 0 success, 1 input error, 2 numerical failure. Execution is
always single-threaded, so identical invocations produce byte-identical
output; --serial is accepted to make that guarantee explicit.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .analysis import (AnalysisConfig, _write_csv, convergence_study,
                       export_modes, load_config, normalize_bc,
                       reproduce_table, run_analysis)
from .exceptions import NumericalError


class _CliInputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through the
    # package's input-error path (exit 1) instead
    def error(self, message):
        raise _CliInputError(message)


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bc", choices=["pp", "cc", "cf", "ff"], help="boundary condition")
    p.add_argument("--h-over-l", type=float, dest="h_over_l",
                   help="thickness-to-span ratio")
    p.add_argument("--degree", type=int, help="basis degree p")
    p.add_argument("--elements", type=int, help="number of elements")
    p.add_argument("--refinement", choices=["h", "p", "k"],
                   help="basis construction path (default k)")
    p.add_argument("--modes", type=int, dest="n_modes", help="number of reported modes")
    p.add_argument("--nu", type=float, help="Poisson's ratio")
    p.add_argument("--kappa", type=float, help="shear correction factor")
    p.add_argument("--quad", type=int, dest="quadrature_points",
                   help="Gauss points per element (default p+1)")
    p.add_argument("--config", help="configuration file (flags override it)")
    p.add_argument("--serial", action="store_true",
                   help="force deterministic single-threaded execution (always on)")


def _config_from_args(args) -> AnalysisConfig:
    config = load_config(args.config) if args.config else AnalysisConfig()
    overrides = {}
    for name in ("bc", "h_over_l", "degree", "elements", "refinement",
                 "n_modes", "nu", "kappa", "quadrature_points"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    if "bc" in overrides:
        overrides["bc"] = normalize_bc(overrides["bc"])
    return dataclasses.replace(config, **overrides)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    config = _config_from_args(args)
    result = run_analysis(config)
    rows = [[m + 1, lam, lam**2] for m, lam in enumerate(result.lam)]
    csv = _write_csv(rows, ["mode", "lambda", "omega_nd"])
    if args.out:
        _emit(csv, args.out)
    print(f"{config.bc}, h/L = {config.h_over_l:g}, p = {config.degree}, "
          f"{config.elements} elements, {result.n_dofs} free DOFs"
          + (f", {result.n_rigid} rigid modes excluded" if result.n_rigid else ""))
    print(f"{'mode':>4}  {'lambda':>12}  {'omega_nd':>12}")
    for m, lam in enumerate(result.lam, start=1):
        print(f"{m:>4}  {lam:>12.6f}  {lam**2:>12.6f}")
    return 0


def _cmd_table(args) -> int:
    result = reproduce_table(args.which)
    _emit(result.to_csv(), args.out)
    if args.out:
        print(f"table {args.which} ({result.bc}) written to {args.out}; "
              f"max deviation from benchmark {result.deviations.max():.3%}")
    return 0


def _cmd_converge(args) -> int:
    config = _config_from_args(args)
    levels = [int(tok) for tok in args.levels.split(",") if tok.strip()]
    result = convergence_study(config, levels)
    _emit(result.to_csv(), args.out)
    if args.out:
        note = ("nested sweep, frequencies non-increasing: "
                f"{result.monotone}" if result.nested
                else "non-nested sweep, monotonicity not checked")
        print(f"convergence study written to {args.out}; {note}")
    return 0


def _cmd_modes(args) -> int:
    config = _config_from_args(args)
    which = list(range(1, config.n_modes + 1))
    paths = export_modes(config, which, args.points, args.out)
    print(f"wrote {len(paths)} mode files to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="igabeam",
                     description="NURBS-based free vibration of Timoshenko beams")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run one analysis")
    _add_model_flags(p)
    p.add_argument("--out", help="write mode table as CSV")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("table", help="reproduce a benchmark table")
    p.add_argument("--which", type=int, choices=[1, 2], required=True,
                   help="1 = pinned-pinned, 2 = clamped-clamped")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.add_argument("--serial", action="store_true",
                   help="force deterministic single-threaded execution (always on)")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("converge", help="refinement sweep")
    _add_model_flags(p)
    p.add_argument("--levels", default="4,8,16,32,64",
                   help="comma-separated element counts (default 4,8,16,32,64)")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("modes", help="export sampled mode shapes")
    _add_model_flags(p)
    p.add_argument("--points", type=int, default=101, help="samples per mode")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_modes)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
