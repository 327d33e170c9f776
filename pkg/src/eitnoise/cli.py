"""Command line interface.

Subcommands: sweep (1-D parameter sweeps to CSV), figure (preset CSV data
for the standard figures), witness (one witness report as JSON), validate
(Monte Carlo vs analytic comparison).  Exit codes: 0 success, 1 a
statistical validation failed, 2 usage or parameter errors.

Relative --out paths are resolved against $EITNOISE_OUT_DIR when set.
CSV outputs written to a file get a JSON sidecar at <out>.json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import __version__
from .errors import EitNoiseError
from .model import ModelParams, validate_params
from .oracle import (
    OracleConfig,
    PASS_FRACTION_REQUIRED,
    REPORT_SCHEMA,
    report_json,
    validate_config,
    validate_grid,
)
from .runner import (
    CSV_COLUMNS,
    FIGURE_NAMES,
    SWEEP_AXES,
    SweepSpec,
    generate_figure,
    generate_sweep,
    rows_to_csv,
    spec_from_sidecar,
    validation_preset,
)
from .witness import (
    Convention,
    covariance_witness_at,
    to_convention,
    witness_closed_form,
)

OUT_DIR_ENV = "EITNOISE_OUT_DIR"


def _param_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("model parameters")
    g.add_argument("--omega1", type=float, default=1.0, help="control Rabi frequency")
    g.add_argument("--omega2", type=float, default=1.0, help="probe Rabi frequency")
    g.add_argument("--gamma", type=float, default=1.0, help="optical decay rate")
    g.add_argument("--coupling", type=float, default=1.0,
                   help="atom-field coupling density")
    g.add_argument("--r", type=float, default=1.0, help="input squeezing parameter")
    g.add_argument("--eta", type=float, default=1.0, help="preparation efficiency")
    g.add_argument("--kappa", type=float, default=1.0, help="hybrid witness weight")
    g.add_argument("--h1", type=float, default=-3.0, help="gain on the control field")
    g.add_argument("--h2", type=float, default=-3.0, help="gain on the probe field")
    o = p.add_argument_group("output")
    o.add_argument("--seed", type=int, default=20260814, help="base RNG seed")
    o.add_argument("--out", type=str, default=None,
                   help="output path (default: stdout)")
    o.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format for tabular commands")
    return p


def build_parser() -> argparse.ArgumentParser:
    parent = _param_parent()
    ap = argparse.ArgumentParser(
        prog="eitnoise",
        description="Quadrature-noise spectra and entanglement witnesses "
                    "of twin beams in an EIT medium.")
    ap.add_argument("--version", action="version", version=f"eitnoise {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", parents=[parent],
                        help="evaluate a 1-D sweep and emit CSV rows")
    sw.add_argument("--axis", choices=SWEEP_AXES, help="swept quantity")
    sw.add_argument("--start", type=float, help="axis start")
    sw.add_argument("--stop", type=float, help="axis stop")
    sw.add_argument("--points", type=int, default=100, help="grid size")
    sw.add_argument("--delta", type=float, default=1.0,
                    help="analysis frequency when not the axis")
    sw.add_argument("--z", type=float, default=1.0,
                    help="propagation distance when not the axis")
    sw.add_argument("--columns", type=str, default=None,
                    help="comma-separated subset of the CSV columns")
    sw.add_argument("--replay", type=str, default=None,
                    help="regenerate the sweep described by a JSON sidecar")

    fg = sub.add_parser("figure", parents=[parent],
                        help="emit the CSV data behind a preset figure")
    fg.add_argument("figure", choices=FIGURE_NAMES)
    fg.add_argument("--defaults", action="store_true",
                    help="ignore parameter flags and use the preset values")

    wt = sub.add_parser("witness", parents=[parent],
                        help="witness report at one propagation point")
    wt.add_argument("--zqa", type=float, default=1.0,
                    help="dimensionless distance z*q_a")
    wt.add_argument("--convention", choices=[c.value for c in Convention],
                    default=Convention.NORMALLY_ORDERED.value)

    va = sub.add_parser("validate", parents=[parent],
                        help="Monte Carlo validation against the analytic route")
    va.add_argument("--preset", choices=("default", "small"), default="default")
    va.add_argument("--n-samples", type=int, default=OracleConfig.n_samples)
    va.add_argument("--n-slices", type=int, default=OracleConfig.n_slices)
    va.add_argument("--sigma-bound", type=float, default=OracleConfig.sigma_bound)
    return ap


def _params_from_args(args: argparse.Namespace) -> ModelParams:
    return validate_params(ModelParams(
        omega1=args.omega1, omega2=args.omega2, gamma=args.gamma,
        coupling_density=args.coupling, r=args.r, eta=args.eta,
        kappa=args.kappa))


def _resolve_out(path: str | None) -> str | None:
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_table(columns, rows, sidecar, args) -> None:
    out = _resolve_out(args.out)
    if args.format == "json":
        doc = {"sidecar": sidecar, "rows": [
            {c: row.get(c) for c in columns} for row in rows]}
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", out)
        return
    _emit(rows_to_csv(columns, rows), out)
    if out is not None:
        with open(out + ".json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, sort_keys=True, indent=1)
            fh.write("\n")


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.replay is not None:
        with open(args.replay, encoding="utf-8") as fh:
            spec = spec_from_sidecar(json.load(fh))
    else:
        if args.axis is None or args.start is None or args.stop is None:
            raise EitNoiseError("sweep requires --axis, --start, and --stop "
                                "(or --replay <sidecar>)")
        columns = CSV_COLUMNS if args.columns is None else tuple(
            c.strip() for c in args.columns.split(","))
        spec = SweepSpec(params=_params_from_args(args), axis=args.axis,
                         start=args.start, stop=args.stop, points=args.points,
                         delta=args.delta, z=args.z, h1=args.h1, h2=args.h2,
                         columns=columns)
    rows, sidecar = generate_sweep(spec)
    _emit_table(spec.columns, rows, sidecar, args)
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    params = None if args.defaults else _params_from_args(args)
    columns, rows, sidecar = generate_figure(args.figure, params,
                                             h1=args.h1, h2=args.h2)
    _emit_table(columns, rows, sidecar, args)
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    p = _params_from_args(args)
    conv = Convention(args.convention)
    rep = to_convention(covariance_witness_at(p, args.zqa, args.h1, args.h2), conv)
    closed = to_convention(witness_closed_form(p, args.zqa, args.h1, args.h2), conv)
    doc = asdict(rep)
    doc["convention"] = rep.convention.value
    doc["z_qa"] = args.zqa
    doc["h_signs"] = list(rep.h_signs) if rep.h_signs else None
    # independent closed-form route, for cross-checking the report
    doc["closed_form"] = {"i1": closed.i1, "i2": closed.i2,
                          "i3": closed.i3, "sum_i": closed.sum_i}
    _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n",
          _resolve_out(args.out))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    cfg = validate_config(OracleConfig(
        n_samples=args.n_samples, n_slices=args.n_slices, seed=args.seed,
        sigma_bound=args.sigma_bound))
    groups = []
    n_passed = 0
    n_targets = 0
    for p, grid in validation_preset(args.preset):
        report = validate_grid(p, grid, cfg, witness_gains=(args.h1, args.h2))
        doc = report.to_dict()
        groups.append(doc)
        n_passed += doc["n_passed"]
        n_targets += doc["n_targets"]
    fraction = n_passed / n_targets if n_targets else 1.0
    passed = fraction >= PASS_FRACTION_REQUIRED
    merged = {
        "schema": REPORT_SCHEMA,
        "preset": args.preset,
        "groups": groups,
        "n_targets": n_targets,
        "n_passed": n_passed,
        "pass_fraction": fraction,
        "pass_fraction_required": PASS_FRACTION_REQUIRED,
        "passed": passed,
    }
    _emit(report_json(merged), _resolve_out(args.out))
    if not passed:
        print(f"validation failed: pass fraction {fraction:.4f} < "
              f"{PASS_FRACTION_REQUIRED}", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
    "witness": _cmd_witness,
    "validate": _cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except EitNoiseError as exc:
        print(f"eitnoise {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"eitnoise {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
