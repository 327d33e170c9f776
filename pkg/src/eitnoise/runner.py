"""Grid evaluation behind the command line: sweeps, figure presets, CSV.

The CSV schema is versioned; column names and order are part of the
external contract and golden-file tests pin them.  Every emitted file has
a JSON sidecar carrying the resolved parameters and enough information to
regenerate the CSV byte for byte.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, replace
from typing import Optional

from . import __version__
from .errors import ConfigInvalid
from .model import GridPoint, ModelParams, input_covariance, validate_params
from .spectra import (
    covariance_at,
    q_absorption,
    q_dispersion,
    quadrature_spectrum,
)
from .witness import witness_from_covariance

SCHEMA_VERSION = "eitnoise.csv/1"

CSV_COLUMNS = (
    "delta", "z", "z_qa", "qa", "qo",
    "s11_0", "s22_0", "s11_p2", "s22_p2",
    "c12_0", "c12_p2",
    "i1", "i2", "i3", "sum_i", "genuine",
)

SWEEP_AXES = ("z", "delta", "r", "eta", "ratio")


@dataclass(frozen=True)
class SweepSpec:
    """A one-dimensional parameter sweep.

    axis picks the swept quantity; start/stop/points span it linearly.
    delta and z hold the respective coordinate fixed when it is not the
    axis.  columns selects which CSV columns to emit.
    """

    params: ModelParams
    axis: str
    start: float
    stop: float
    points: int = 100
    delta: float = 1.0
    z: float = 1.0
    h1: float = -3.0
    h2: float = -3.0
    columns: tuple[str, ...] = CSV_COLUMNS


def validate_sweep(spec: SweepSpec) -> SweepSpec:
    """Check the sweep description, naming the offending field on failure."""
    if spec.axis not in SWEEP_AXES:
        raise ConfigInvalid(f"axis must be one of {SWEEP_AXES}, got {spec.axis!r}")
    if spec.points < 2:
        raise ConfigInvalid(f"points must be >= 2, got {spec.points}")
    if not (math.isfinite(spec.start) and math.isfinite(spec.stop)):
        raise ConfigInvalid("start and stop must be finite")
    if spec.start >= spec.stop:
        raise ConfigInvalid(
            f"start must be < stop, got start={spec.start} stop={spec.stop}")
    if spec.axis == "z" and spec.start < 0:
        raise ConfigInvalid(f"start must be >= 0 for a z sweep, got {spec.start}")
    if spec.axis == "eta" and not (0 <= spec.start and spec.stop <= 1):
        raise ConfigInvalid("eta sweep must stay inside [0, 1]")
    if spec.z < 0:
        raise ConfigInvalid(f"z must be >= 0, got {spec.z}")
    unknown = [c for c in spec.columns if c not in CSV_COLUMNS]
    if unknown:
        raise ConfigInvalid(f"columns contains unknown ids {unknown}")
    validate_params(spec.params)
    return spec


def _axis_values(spec: SweepSpec) -> list[float]:
    step = (spec.stop - spec.start) / (spec.points - 1)
    return [spec.start + i * step for i in range(spec.points)]


def evaluate_row(p: ModelParams, delta: float, z: float,
                 h1: float = -3.0, h2: float = -3.0) -> dict:
    """All CSV quantities at one grid point; witness cells are None when
    the closed-form regime (equal drives) does not apply."""
    qa = q_absorption(p, delta)
    qo = q_dispersion(p, delta)
    cov = covariance_at(p, delta, z)
    row = {
        "delta": delta,
        "z": z,
        "z_qa": z * qa,
        "qa": qa,
        "qo": qo,
        "s11_0": quadrature_spectrum(p, delta, z, field=1, theta=0.0),
        "s22_0": quadrature_spectrum(p, delta, z, field=2, theta=0.0),
        "s11_p2": quadrature_spectrum(p, delta, z, field=1, theta=math.pi / 2),
        "s22_p2": quadrature_spectrum(p, delta, z, field=2, theta=math.pi / 2),
        "c12_0": float(cov.m[0, 2].real),
        "c12_p2": float(cov.m[1, 3].real),
        "i1": None, "i2": None, "i3": None, "sum_i": None, "genuine": None,
    }
    if math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0):
        rep = witness_from_covariance(cov, h1, h2, p.kappa,
                                      reference=input_covariance(p.r, p.eta))
        row.update(i1=rep.i1, i2=rep.i2, i3=rep.i3, sum_i=rep.sum_i,
                   genuine=rep.genuine_tripartite)
    return row


def generate_sweep(spec: SweepSpec) -> tuple[list[dict], dict]:
    """Evaluate the sweep grid in order; returns (rows, sidecar)."""
    validate_sweep(spec)
    p0 = validate_params(spec.params)
    rows = []
    for v in _axis_values(spec):
        p, delta, z = p0, spec.delta, spec.z
        if spec.axis == "z":
            z = v
        elif spec.axis == "delta":
            delta = v
        elif spec.axis == "r":
            p = replace(p0, r=v)
        elif spec.axis == "eta":
            p = replace(p0, eta=v)
        elif spec.axis == "ratio":
            p = replace(p0, omega2=v * p0.omega1)
        rows.append(evaluate_row(p, delta, z, spec.h1, spec.h2))
    sidecar = {
        "schema": SCHEMA_VERSION,
        "tool": "eitnoise",
        "version": __version__,
        "command": "sweep",
        "axis": spec.axis,
        "start": spec.start,
        "stop": spec.stop,
        "points": spec.points,
        "delta": spec.delta,
        "z": spec.z,
        "h1": spec.h1,
        "h2": spec.h2,
        "params": asdict(p0),
        "columns": list(spec.columns),
    }
    return rows, sidecar


def spec_from_sidecar(doc: dict) -> SweepSpec:
    """Rebuild the sweep description a sidecar was written from."""
    if doc.get("schema") != SCHEMA_VERSION or doc.get("command") != "sweep":
        raise ConfigInvalid("sidecar does not describe a sweep of this schema")
    return SweepSpec(
        params=ModelParams(**doc["params"]),
        axis=doc["axis"], start=doc["start"], stop=doc["stop"],
        points=doc["points"], delta=doc["delta"], z=doc["z"],
        h1=doc["h1"], h2=doc["h2"], columns=tuple(doc["columns"]),
    )


def format_cell(v) -> str:
    """Locale-independent cell text: 13 significant digits for floats,
    0/1 for booleans, empty for missing."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return f"{v:.12e}"
    return str(v)


def rows_to_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(row.get(c)) for c in columns])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# figure presets

FIGURE_NAMES = ("fig2", "fig3", "fig4", "fig5")

_OSC_RATIO_HIGH = 1.0 + math.sqrt(2.0)


def oscillation_detuning(p: ModelParams, phase_ratio: float = 7.0) -> float:
    """Detuning where q_o / q_a equals phase_ratio (many oscillations per
    decay length): the positive root of 2 d^2 + phase_ratio gamma d - 2 W^2."""
    g = p.gamma * phase_ratio
    return (-g + math.sqrt(g * g + 16.0 * p.omega_quad)) / 4.0


def generate_figure(name: str, params: Optional[ModelParams] = None,
                    h1: float = -3.0, h2: float = -3.0) -> tuple[tuple[str, ...], list[dict], dict]:
    """Rows and sidecar for one of the named figure presets.

    fig2  absorption profile of the lossy mode over detuning
    fig3  single-field spectra on the oscillatory drive branch
    fig4  probe spectra at equal drives with their large-z asymptotes
    fig5  witnesses and their sum at equal drives
    """
    if name not in FIGURE_NAMES:
        raise ConfigInvalid(f"unknown figure {name!r}; choose from {FIGURE_NAMES}")
    sidecar = {
        "schema": SCHEMA_VERSION,
        "tool": "eitnoise",
        "version": __version__,
        "command": "figure",
        "figure": name,
    }
    if name == "fig2":
        p = validate_params(params or ModelParams(omega1=1.0, omega2=1.0))
        columns = ("delta", "qa")
        deltas = [-4.0 + i * 0.01 for i in range(801)]
        rows = [{"delta": d, "qa": q_absorption(p, d)} for d in deltas]
        peak = (p.omega1 + p.omega2) / 2.0
        sidecar["annotations"] = {
            "peak_delta": peak,
            "peak_qa": q_absorption(p, peak),
            "carrier_qa": q_absorption(p, 0.0),
        }
    elif name == "fig3":
        p = validate_params(params or ModelParams(
            omega1=1.0, omega2=_OSC_RATIO_HIGH, r=1.0))
        delta = oscillation_detuning(p)
        qa = q_absorption(p, delta)
        columns = ("z_qa", "s11_0", "s22_0", "s11_p2", "s22_p2")
        rows = []
        for i in range(601):
            x = 3.0 * i / 600.0
            z = x / qa
            rows.append({
                "z_qa": x,
                "s11_0": quadrature_spectrum(p, delta, z, field=1, theta=0.0),
                "s22_0": quadrature_spectrum(p, delta, z, field=2, theta=0.0),
                "s11_p2": quadrature_spectrum(p, delta, z, field=1, theta=math.pi / 2),
                "s22_p2": quadrature_spectrum(p, delta, z, field=2, theta=math.pi / 2),
            })
        sidecar["annotations"] = {
            "delta": delta,
            "phase_ratio": q_dispersion(p, delta) / qa,
            "vacuum_level": 1.0,
            "field_label_note": (
                "the general closed form assigns the squeezing-phase "
                "oscillation to the probe theta=0 quadrature and to the "
                "control theta=pi/2 quadrature; simplified treatments "
                "sometimes quote both fields as identical"),
        }
    elif name == "fig4":
        p = validate_params(params or ModelParams(omega1=1.0, omega2=1.0, r=1.0))
        delta = (p.omega1 + p.omega2) / 2.0
        qa = q_absorption(p, delta)
        columns = ("z_qa", "s22_0", "s22_p2")
        rows = []
        for i in range(501):
            x = 5.0 * i / 500.0
            z = x / qa
            rows.append({
                "z_qa": x,
                "s22_0": quadrature_spectrum(p, delta, z, field=2, theta=0.0),
                "s22_p2": quadrature_spectrum(p, delta, z, field=2, theta=math.pi / 2),
            })
        sidecar["annotations"] = {
            "delta": delta,
            "vacuum_level": 1.0,
            "asymptotes": {
                "s22_0": 1.0 + p.eta * math.expm1(-2.0 * p.r) / 2.0,
                "s22_p2": 1.0 + p.eta * math.expm1(2.0 * p.r) / 2.0,
            },
        }
    else:  # fig5
        p = validate_params(params or ModelParams(omega1=1.0, omega2=1.0, r=1.0))
        delta = (p.omega1 + p.omega2) / 2.0
        qa = q_absorption(p, delta)
        ref = input_covariance(p.r, p.eta)
        columns = ("z_qa", "i1", "i2", "i3", "sum_i")
        rows = []
        for i in range(601):
            x = 3.0 * i / 600.0
            rep = witness_from_covariance(covariance_at(p, delta, x / qa),
                                          h1, h2, p.kappa, reference=ref)
            rows.append({"z_qa": x, "i1": rep.i1, "i2": rep.i2,
                         "i3": rep.i3, "sum_i": rep.sum_i})
        sidecar["annotations"] = {
            "delta": delta,
            "h1": h1,
            "h2": h2,
            "thresholds": {
                "pair": 0.0,
                "hybrid": 1.0 - p.kappa,
                "genuine_sum": -6.0 - 2.0 * p.kappa,
            },
        }
    sidecar["params"] = asdict(p)
    sidecar["columns"] = list(columns)
    return columns, rows, sidecar


# ---------------------------------------------------------------------------
# validation presets

def validation_preset(name: str = "default") -> list[tuple[ModelParams, list[GridPoint]]]:
    """Parameter sets and grid points for the validate subcommand.

    default: 10 equal-drive points and 10 oscillation-branch points with
    physical z chosen to hit round z q_a targets.  small: a four-point
    smoke grid for quick runs.
    """
    equal = validate_params(ModelParams(omega1=1.0, omega2=1.0, r=1.0))
    osc = validate_params(ModelParams(omega1=1.0, omega2=1.0 - math.sqrt(2.0), r=1.0))

    def pts(p: ModelParams, pairs) -> list[GridPoint]:
        return [GridPoint(z=x / q_absorption(p, d), delta=d) for d, x in pairs]

    if name == "default":
        equal_pairs = [(d, x) for d in (0.6, 1.0, 1.4) for x in (0.5, 1.0, 2.0)]
        equal_pairs.append((1.0, 4.0))
        osc_pairs = [(d, x) for d in (0.2, 0.3, 0.4, 0.5, 0.6) for x in (0.2, 0.5)]
    elif name == "small":
        equal_pairs = [(1.0, 0.5), (1.0, 2.0)]
        osc_pairs = [(0.3, 0.2), (0.5, 0.5)]
    else:
        raise ConfigInvalid(f"unknown validation preset {name!r}")
    return [(equal, pts(equal, equal_pairs)), (osc, pts(osc, osc_pairs))]
