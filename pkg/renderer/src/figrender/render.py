"""Render figure-preset CSV tables to SVG or PNG.

Every table comes with a JSON sidecar written by the producing tool; all
reference levels drawn here (thresholds, asymptotes, vacuum level, peak
markers) are read from that sidecar, never hardcoded, so the plots stay
honest when the producing parameters change.
"""

import csv
import json
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
# stable ids inside the SVG regardless of process or path
matplotlib.rcParams["svg.hashsalt"] = "figrender"

import matplotlib.pyplot as plt
import numpy as np

EXPECTED_SCHEMA = "eitnoise.csv/1"
FIGURE_NAMES = ("fig2", "fig3", "fig4", "fig5")


class RenderError(Exception):
    """Bad table, sidecar, or figure selection."""


def load_table(path):
    """Read a CSV table and its <name>.json sidecar.

    Returns (sidecar dict, column dict of float arrays). Empty cells load
    as NaN. Rejects missing files, invalid JSON, and foreign schemas.
    """
    path = Path(path)
    sidecar_path = path.with_name(path.name + ".json")
    if not path.is_file():
        raise RenderError(f"no such table: {path}")
    if not sidecar_path.is_file():
        raise RenderError(f"missing sidecar: {sidecar_path}")
    try:
        sidecar = json.loads(sidecar_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise RenderError(f"sidecar is not valid JSON: {exc}") from exc
    schema = sidecar.get("schema")
    if schema != EXPECTED_SCHEMA:
        raise RenderError(
            f"unsupported table schema {schema!r}, expected {EXPECTED_SCHEMA!r}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        rows = list(reader)
    if not header or not rows:
        raise RenderError(f"empty table: {path}")
    data = {}
    for k, name in enumerate(header):
        data[name] = np.array(
            [float(row[k]) if row[k] else math.nan for row in rows])
    return sidecar, data


def _require(data, names):
    missing = [n for n in names if n not in data]
    if missing:
        raise RenderError(f"table lacks columns {missing}")


def _crossings(x, y, level):
    """x locations where y crosses level, linearly interpolated."""
    s = np.asarray(y) - level
    out = [float(x[k]) for k in np.flatnonzero(s == 0.0)]
    for k in np.flatnonzero(s[:-1] * s[1:] < 0.0):
        frac = s[k] / (s[k] - s[k + 1])
        out.append(float(x[k] + frac * (x[k + 1] - x[k])))
    return sorted(out)


def _fig2(data, ann):
    _require(data, ("delta", "qa"))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(data["delta"], data["qa"], color="tab:blue", lw=1.6)
    peak = ann.get("peak_delta")
    if peak is not None:
        for xv in (-peak, peak):
            ax.axvline(xv, color="0.65", ls=":", lw=0.9)
    if "carrier_qa" in ann:
        ax.axhline(ann["carrier_qa"], color="0.8", lw=0.8)
    ax.set_xlabel("analysis frequency (units of gamma)")
    ax.set_ylabel("absorption coefficient")
    ax.set_title("absorption window")
    return fig


def _fig3(data, ann):
    _require(data, ("z_qa", "s11_0", "s22_0", "s11_p2", "s22_p2"))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    styles = {"s11_0": ("tab:blue", "-"), "s22_0": ("tab:red", "-"),
              "s11_p2": ("tab:blue", "--"), "s22_p2": ("tab:red", "--")}
    for name, (color, ls) in styles.items():
        ax.plot(data["z_qa"], data[name], color=color, ls=ls, lw=1.3,
                label=name)
    if "vacuum_level" in ann:
        ax.axhline(ann["vacuum_level"], color="0.7", lw=0.8)
    ax.set_xlabel("depth (absorption lengths)")
    ax.set_ylabel("quadrature noise")
    ax.set_title("noise exchange between the fields")
    ax.legend(loc="upper right", fontsize=8)
    return fig


def _fig4(data, ann):
    _require(data, ("z_qa", "s22_0", "s22_p2"))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(data["z_qa"], data["s22_0"], color="tab:green", lw=1.6,
            label="s22_0")
    ax.plot(data["z_qa"], data["s22_p2"], color="tab:orange", lw=1.6,
            label="s22_p2")
    for name, level in ann.get("asymptotes", {}).items():
        ax.axhline(level, color="0.4", ls="--", lw=0.9)
    vac = ann.get("vacuum_level", 1.0)
    floor = min(0.0, float(np.nanmin(data["s22_0"])))
    ax.axhspan(floor, vac, color="tab:green", alpha=0.10)  # squeezing region
    ax.set_xlabel("depth (absorption lengths)")
    ax.set_ylabel("quadrature noise")
    ax.set_title("equal-drive damping toward the asymptotes")
    ax.legend(loc="center right", fontsize=8)
    return fig


def _fig5(data, ann):
    _require(data, ("z_qa", "i1", "i2", "i3", "sum_i"))
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for name, color in (("i1", "tab:blue"), ("i2", "tab:red"),
                        ("i3", "tab:purple"), ("sum_i", "black")):
        ax.plot(data["z_qa"], data[name], color=color, lw=1.4, label=name)
    thresholds = ann.get("thresholds", {})
    for level in sorted(set(thresholds.values())):
        ax.axhline(level, color="0.5", ls="--", lw=0.9)
    # mark where the hybrid witness and the tri-partite sum go critical
    marks = []
    if "hybrid" in thresholds:
        marks += _crossings(data["z_qa"], data["i2"], thresholds["hybrid"])
    if "genuine_sum" in thresholds:
        marks += _crossings(data["z_qa"], data["sum_i"],
                            thresholds["genuine_sum"])
    for xv in marks:
        ax.axvline(xv, color="0.3", ls=":", lw=0.9)
    ax.set_xlabel("depth (absorption lengths)")
    ax.set_ylabel("witness value")
    ax.set_title("entanglement witnesses along propagation")
    ax.legend(loc="upper right", fontsize=8)
    return fig


_BUILDERS = {"fig2": _fig2, "fig3": _fig3, "fig4": _fig4, "fig5": _fig5}


def render(figure, csv_path):
    """Build the named figure from a table produced for it."""
    if figure not in _BUILDERS:
        raise RenderError(f"unknown figure {figure!r}, expected one of "
                          f"{', '.join(FIGURE_NAMES)}")
    sidecar, data = load_table(csv_path)
    produced_for = sidecar.get("figure")
    if produced_for != figure:
        raise RenderError(
            f"table was produced for {produced_for!r}, not {figure!r}")
    return _BUILDERS[figure](data, sidecar.get("annotations", {}))


def save(fig, out, fmt=None):
    """Write the figure and close it.  SVG output carries no timestamp."""
    out = Path(out)
    if fmt is None:
        fmt = out.suffix.lstrip(".").lower() or "svg"
    if fmt not in ("svg", "png"):
        raise RenderError(f"unsupported format {fmt!r}, use svg or png")
    try:
        if fmt == "svg":
            fig.savefig(out, format="svg", metadata={"Date": None})
        else:
            fig.savefig(out, format="png", dpi=150)
    finally:
        plt.close(fig)
