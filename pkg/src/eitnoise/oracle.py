"""Independent Monte Carlo oracle for the analytic covariance route.

The frequency-domain fluctuations at one analysis frequency form a proper
circular complex Gaussian 4-vector with the model's input covariance.
Samples are pushed through the medium slice by slice with the exact
per-slice transfer (complex attenuation of the lossy pair plus fresh
vacuum), so the only discrepancy from the analytic result is statistical.

Randomness comes from counter-based Philox streams keyed by (seed, stream
tag): tag 0 draws the input, tag 1 + j the vacuum of slice j.  Results
are therefore reproducible bitwise and independent of evaluation order.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ConfigInvalid
from .model import GridPoint, ModelParams, QuadCovariance, input_covariance
from .spectra import build_transfer, covariance_at
from .witness import witness_from_covariance

GENERATOR_ID = "philox4x64"
REPORT_SCHEMA = "eitnoise.validation/1"
PASS_FRACTION_REQUIRED = 0.99


@dataclass(frozen=True)
class OracleConfig:
    """Monte Carlo settings.

    n_samples    independent frequency-domain draws (>= 1000)
    n_slices     propagation slices (>= 2); the per-slice channel is exact,
                 so this only has to resolve nothing, but two slices keep
                 the cascade composition honest
    seed         base seed; grid points use seed + point index
    sigma_bound  acceptance band half-width in standard errors
    """

    n_samples: int = 100_000
    n_slices: int = 64
    seed: int = 20260814
    sigma_bound: float = 3.0


def validate_config(cfg: OracleConfig) -> OracleConfig:
    if cfg.n_samples < 1000:
        raise ConfigInvalid(f"n_samples must be >= 1000, got {cfg.n_samples}")
    if cfg.n_slices < 2:
        raise ConfigInvalid(f"n_slices must be >= 2, got {cfg.n_slices}")
    if not 0 <= cfg.seed < 2 ** 64:
        raise ConfigInvalid(f"seed must fit in 64 bits, got {cfg.seed}")
    if not (math.isfinite(cfg.sigma_bound) and cfg.sigma_bound > 0):
        raise ConfigInvalid(f"sigma_bound must be > 0, got {cfg.sigma_bound}")
    return cfg


def _stream(seed: int, tag: int) -> np.random.Generator:
    # 128-bit Philox key: high word = seed, low word = stream tag
    return np.random.Generator(np.random.Philox(key=(int(seed) << 64) | int(tag)))


def draw_input_samples(n: int, r: float, eta: float, seed: int) -> np.ndarray:
    """Proper complex Gaussian draws of the input quadrature 4-vector."""
    rng = _stream(seed, 0)
    g = rng.standard_normal((n, 8))
    zeta = (g[:, :4] + 1j * g[:, 4:]) / math.sqrt(2.0)
    chol = np.linalg.cholesky(input_covariance(r, eta).m)
    return zeta @ chol.T


def propagate_samples(y: np.ndarray, p: ModelParams, delta: float, z: float,
                      n_slices: int, seed: int, tag_base: int = 1) -> np.ndarray:
    """Push samples through n_slices exact sub-channels covering length z."""
    model = build_transfer(p, delta, z / n_slices)
    rot = model.basis
    t = model.amplitude_transfer
    fill_amp = math.sqrt(model.vacuum_fill)
    ym = y @ rot.T
    n = ym.shape[0]
    for j in range(n_slices):
        rng = _stream(seed, tag_base + j)
        g = rng.standard_normal((n, 4))
        vac = (g[:, :2] + 1j * g[:, 2:]) / math.sqrt(2.0)
        ym[:, 2:] = t * ym[:, 2:] + fill_amp * vac
    return ym @ rot


def _covariance_statistics(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Entrywise mean and standard error of Re(y_a conj(y_b))."""
    re, im = y.real, y.imag
    w = np.einsum("ni,nj->nij", re, re) + np.einsum("ni,nj->nij", im, im)
    n = w.shape[0]
    return w.mean(axis=0), w.std(axis=0, ddof=1) / math.sqrt(n)


def simulate_covariance(p: ModelParams, delta: float, z: float,
                        cfg: OracleConfig) -> tuple[QuadCovariance, np.ndarray]:
    """Monte Carlo estimate of the output covariance with its stderr matrix."""
    validate_config(cfg)
    y = draw_input_samples(cfg.n_samples, p.r, p.eta, cfg.seed)
    y = propagate_samples(y, p, delta, z, cfg.n_slices, cfg.seed)
    est, err = _covariance_statistics(y)
    return QuadCovariance(est), err


def _witness_statistic(y: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Per-sample normally ordered variance statistic of combination w."""
    u = y @ w
    return (u.real ** 2 + u.imag ** 2) - float(w @ w)


@dataclass(frozen=True)
class ValidationEntry:
    """One target comparison at one grid point."""

    target: str
    delta: float
    z: float
    point_seed: int
    analytic: float
    estimate: float
    stderr: float
    z_score: float
    passed: bool


@dataclass(frozen=True)
class ValidationReport:
    """Monte Carlo vs analytic comparison over a grid for one parameter set."""

    params: ModelParams
    config: OracleConfig
    entries: list[ValidationEntry] = field(default_factory=list)

    @property
    def pass_fraction(self) -> float:
        if not self.entries:
            return 1.0
        return sum(e.passed for e in self.entries) / len(self.entries)

    @property
    def max_abs_z(self) -> float:
        return max((abs(e.z_score) for e in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return self.pass_fraction >= PASS_FRACTION_REQUIRED

    def to_dict(self) -> dict:
        z_scores = [e.z_score for e in self.entries]
        return {
            "schema": REPORT_SCHEMA,
            "generator": GENERATOR_ID,
            "params": asdict(self.params),
            "config": asdict(self.config),
            "entries": [asdict(e) for e in self.entries],
            "n_targets": len(self.entries),
            "n_passed": int(sum(e.passed for e in self.entries)),
            "pass_fraction": self.pass_fraction,
            "mean_z": float(np.mean(z_scores)) if z_scores else 0.0,
            "max_abs_z": self.max_abs_z,
            "passed": self.passed,
        }


def report_json(report: ValidationReport | dict) -> str:
    """Canonical JSON serialization; identical seeds give identical bytes."""
    doc = report.to_dict() if isinstance(report, ValidationReport) else report
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


_COV_INDICES = [(a, b) for a in range(4) for b in range(a, 4)]


def validate_grid(p: ModelParams, grid: Sequence[GridPoint],
                  cfg: OracleConfig,
                  witness_gains: Optional[tuple[float, float]] = (-3.0, -3.0),
                  ) -> ValidationReport:
    """Compare Monte Carlo estimates against the analytic covariance route.

    Every upper-triangle covariance entry is a target; in the equal-drive
    regime the three witnesses are targets too, evaluated on the simulated
    samples at the gain signs the analytic route selects.  Each grid point
    gets its own derived seed so targets are independent across points.
    """
    validate_config(cfg)
    equal_drive = math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0)
    ref = input_covariance(p.r, p.eta)
    entries: list[ValidationEntry] = []
    for i, pt in enumerate(grid):
        point_seed = (cfg.seed + i) % (2 ** 64)
        analytic = covariance_at(p, pt.delta, pt.z)
        y = draw_input_samples(cfg.n_samples, p.r, p.eta, point_seed)
        y = propagate_samples(y, p, pt.delta, pt.z, cfg.n_slices, point_seed)
        est, err = _covariance_statistics(y)

        def add(target: str, ana: float, est_v: float, err_v: float) -> None:
            zs = (est_v - ana) / err_v if err_v > 0 else 0.0
            entries.append(ValidationEntry(
                target=target, delta=pt.delta, z=pt.z, point_seed=point_seed,
                analytic=float(ana), estimate=float(est_v), stderr=float(err_v),
                z_score=float(zs), passed=bool(abs(zs) <= cfg.sigma_bound)))

        for a, b in _COV_INDICES:
            add(f"cov[{a}][{b}]", analytic.m[a, b].real, est[a, b], err[a, b])

        if equal_drive and witness_gains is not None:
            h1, h2 = witness_gains
            rep = witness_from_covariance(analytic, h1, h2, p.kappa, reference=ref)
            s1, s2 = rep.h_signs
            n = cfg.n_samples
            w_i1 = (_witness_statistic(y, np.array([0.0, 1.0, 0.0, -1.0]))
                    + _witness_statistic(y, np.array([1.0, 0.0, 1.0, 0.0])))
            w_i2 = (_witness_statistic(y, np.array([0.0, 1.0, 0.0, 0.0]))
                    + _witness_statistic(y, np.array([1.0, 0.0, s2 * h2, 0.0])))
            w_i3 = (_witness_statistic(y, np.array([0.0, 0.0, 0.0, 1.0]))
                    + _witness_statistic(y, np.array([s1 * h1, 0.0, 1.0, 0.0])))
            for name, ana, w in (("i1", rep.i1, w_i1), ("i2", rep.i2, w_i2),
                                 ("i3", rep.i3, w_i3)):
                add(name, ana, w.mean(), w.std(ddof=1) / math.sqrt(n))
    return ValidationReport(params=p, config=cfg, entries=entries)
