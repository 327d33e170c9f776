"""Propagation constants, quadrature-noise spectra, and the transfer model.

The medium couples the two fields through a shared atomic coherence.  At
analysis frequency delta the collective mode (Omega1 a1 + Omega2 a2)/W is
conserved while the orthogonal combination acquires the complex amplitude
transfer t = exp(-(q_a + i s q_o) z) and is refilled with vacuum.  On real
symmetrized covariances the dispersion sign s drops out (only cos(q_o z)
survives), so it is fixed at build time and verified on import.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import CaseMismatch, NotSupported
from .model import ModelParams, QuadCovariance, input_covariance

# Sign of the dispersive phase in the lossy-mode transfer.  Symmetrized
# covariances are even in this sign; +1 is the propagating-frame choice.
PHASE_SIGN = +1

_THETA_TOL = 1e-12


def _denominator(p: ModelParams, delta: float) -> float:
    """Resonance denominator ((Omega1+Omega2)^2/4 - delta^2)^2 + delta^2 gamma^2/4."""
    m = (p.omega1 + p.omega2) ** 2 / 4.0
    return (m - delta ** 2) ** 2 + delta ** 2 * p.gamma ** 2 / 4.0


def q_absorption(p: ModelParams, delta: float) -> float:
    """Absorption constant q_a(delta) of the lossy collective mode.

    q_a = C delta^2 (gamma/2) / D(delta) with D the resonance denominator.
    Even in delta, zero at the carrier, global maxima at
    delta = +-(Omega1+Omega2)/2.  When Omega1 + Omega2 = 0 the carrier
    point is a removable 0/0; the limit 2C/gamma is returned there.
    """
    if p.omega1 + p.omega2 == 0.0:
        # cancelled form: q_a = C (gamma/2) / (delta^2 + gamma^2/4)
        return p.coupling_density * (p.gamma / 2.0) / (delta ** 2 + p.gamma ** 2 / 4.0)
    return p.coupling_density * delta ** 2 * (p.gamma / 2.0) / _denominator(p, delta)


def q_dispersion(p: ModelParams, delta: float) -> float:
    """Dispersion constant q_o(delta) of the lossy collective mode.

    q_o = C delta (Omega1^2 + Omega2^2 - delta^2) / D(delta).  Odd in
    delta with zeros at delta^2 = Omega1^2 + Omega2^2.  On the
    Omega1 + Omega2 = 0 branch the carrier is a pole of odd symmetry and
    the symmetric value 0 is returned at exactly delta = 0.
    """
    if p.omega1 + p.omega2 == 0.0:
        if delta == 0.0:
            return 0.0
        # cancelled form: q_o = C (W^2 - delta^2) / (delta (delta^2 + gamma^2/4))
        return (p.coupling_density * (p.omega_quad - delta ** 2)
                / (delta * (delta ** 2 + p.gamma ** 2 / 4.0)))
    return p.coupling_density * delta * (p.omega_quad - delta ** 2) / _denominator(p, delta)


def _effective_r(r: float, theta: float) -> float:
    """Map the quadrature angle onto the squeezing parameter.

    theta = 0 uses r as is; theta = pi/2 flips its sign.  Other angles are
    outside the closed-form family.
    """
    if abs(theta) <= _THETA_TOL:
        return r
    if abs(theta - math.pi / 2.0) <= _THETA_TOL:
        return -r
    raise NotSupported(f"theta must be 0 or pi/2, got {theta}")


def spectrum_from_propagation(omega1: float, omega2: float, r: float,
                              eta: float, qa_z: float, qo_z: float,
                              field: int = 2, theta: float = 0.0) -> float:
    """Quadrature spectrum as an explicit function of the accumulated
    absorption qa_z = q_a z and rotation qo_z = q_o z.

    This is the general closed form: a constant term, a cross term damped
    by e^{-qa_z} and oscillating as cos(qo_z), and a doubly damped term
    e^{-2 qa_z}.  Field 1 is obtained from field 2 by swapping the drives.
    Setting qa_z = 0 isolates the pure-oscillation behavior.
    """
    r = _effective_r(r, theta)
    if field == 1:
        omega1, omega2 = omega2, omega1
    elif field != 2:
        raise NotSupported(f"field must be 1 or 2, got {field}")
    w2 = omega1 ** 2 + omega2 ** 2
    if w2 == 0.0:
        raise ZeroDivisionError("omega1 and omega2 cannot both vanish")
    w4 = w2 * w2
    e2r = math.exp(2.0 * r)
    em2r = math.exp(-2.0 * r)
    const = (-omega2 ** 2 / w2
             + omega2 ** 2 * e2r * (omega1 - omega2) ** 2 / (2.0 * w4)
             + omega2 ** 2 * em2r * (omega1 + omega2) ** 2 / (2.0 * w4))
    cross = (omega1 * omega2 * em2r * (omega1 ** 2 - omega2 ** 2) / w4
             + e2r * (omega1 * omega2 ** 3 - omega1 ** 3 * omega2) / w4)
    damped = (-omega1 ** 2 / w2
              + omega1 ** 2 * em2r * (omega1 - omega2) ** 2 / (2.0 * w4)
              + omega1 ** 2 * e2r * (omega1 + omega2) ** 2 / (2.0 * w4))
    return 1.0 + eta * (const
                        + math.exp(-qa_z) * math.cos(qo_z) * cross
                        + math.exp(-2.0 * qa_z) * damped)


def quadrature_spectrum(p: ModelParams, delta: float, z: float,
                        field: int = 2, theta: float = 0.0) -> float:
    """Noise spectrum S_ii^theta(delta, z) of one output field."""
    qa_z = q_absorption(p, delta) * z
    qo_z = q_dispersion(p, delta) * z
    return spectrum_from_propagation(p.omega1, p.omega2, p.r, p.eta,
                                     qa_z, qo_z, field=field, theta=theta)


def full_spectrum_s22(p: ModelParams, delta: float, z: float) -> float:
    """Amplitude-quadrature spectrum of the probe, S_22^0."""
    return quadrature_spectrum(p, delta, z, field=2, theta=0.0)


def full_spectrum_s11(p: ModelParams, delta: float, z: float) -> float:
    """Amplitude-quadrature spectrum of the control, S_11^0."""
    return quadrature_spectrum(p, delta, z, field=1, theta=0.0)


class SpecialCase(enum.Enum):
    """Named parameter regimes with simplified spectra."""

    STRONG_CONTROL = "strong_control"
    OSCILLATION = "oscillation"
    EQUAL_RABI = "equal_rabi"
    EQUAL_RABI_ASYMPTOTIC = "equal_rabi_asymptotic"


# Drive ratios with q_o / q_a extrema where the spectra oscillate without
# appreciable damping: omega2/omega1 = 1 +- sqrt(2).
OSCILLATION_RATIOS = (1.0 - math.sqrt(2.0), 1.0 + math.sqrt(2.0))


def special_case_spectrum(case: SpecialCase, p: ModelParams, delta: float,
                          z: float, theta: float = 0.0, field: int = 2) -> float:
    """Simplified closed form for one of the named regimes.

    These serve exclusively as cross-check targets for the full spectrum.
    Raises CaseMismatch when the parameters do not satisfy the regime the
    formula was derived in.  The field argument matters only for
    STRONG_CONTROL (the two fields behave differently there); the other
    regimes are field-symmetric.
    """
    r = _effective_r(p.r, theta)
    e2r = math.exp(2.0 * r)
    em2r = math.exp(-2.0 * r)
    if case is SpecialCase.STRONG_CONTROL:
        if abs(p.omega2) > 1e-6 * abs(p.omega1):
            raise CaseMismatch(
                f"strong control requires |omega2| <= 1e-6 |omega1|, "
                f"got ratio {p.omega2 / p.omega1 if p.omega1 else math.inf!r}")
        base = p.eta * (math.cosh(2.0 * r) - 1.0)
        if field == 1:
            return 1.0 + base
        if field == 2:
            return 1.0 + base * math.exp(-2.0 * q_absorption(p, delta) * z)
        raise NotSupported(f"field must be 1 or 2, got {field}")
    if case is SpecialCase.OSCILLATION:
        if p.omega1 == 0.0 or all(
                not math.isclose(p.omega2 / p.omega1, rho, rel_tol=1e-9)
                for rho in OSCILLATION_RATIOS):
            raise CaseMismatch(
                "oscillation regime requires omega2/omega1 = 1 +- sqrt(2)")
        phase = q_dispersion(p, delta) * z
        return 1.0 + (p.eta / 4.0) * (1.0 - em2r) * (
            (e2r + 1.0) * math.cos(phase) + e2r - 3.0)
    if case in (SpecialCase.EQUAL_RABI, SpecialCase.EQUAL_RABI_ASYMPTOTIC):
        if not math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0):
            raise CaseMismatch("equal-drive regime requires omega1 == omega2")
        if case is SpecialCase.EQUAL_RABI:
            t2 = math.exp(-2.0 * q_absorption(p, delta) * z)
            return 1.0 + p.eta * ((e2r - 1.0) * t2 / 2.0 + (em2r - 1.0) / 2.0)
        if q_absorption(p, delta) == 0.0:
            raise CaseMismatch(
                "the large-z asymptote needs absorption, so delta != 0")
        return 1.0 + p.eta * (em2r - 1.0) / 2.0
    raise NotSupported(f"unknown special case {case!r}")


@dataclass(frozen=True)
class TransferModel:
    """Single-slab transfer of the conserved/lossy collective mode pair.

    conserved_mode, lossy_mode  unit coefficient vectors over (a1, a2)
    amplitude_transfer          complex factor t applied to the lossy mode
    vacuum_fill                 1 - |t|^2, weight of the injected vacuum
    """

    conserved_mode: np.ndarray
    lossy_mode: np.ndarray
    amplitude_transfer: complex
    vacuum_fill: float

    def __post_init__(self) -> None:
        c = np.asarray(self.conserved_mode, dtype=float)
        l = np.asarray(self.lossy_mode, dtype=float)
        if not (math.isclose(float(c @ c), 1.0, rel_tol=1e-12)
                and math.isclose(float(l @ l), 1.0, rel_tol=1e-12)
                and abs(float(c @ l)) < 1e-12):
            raise ValueError("mode vectors must be orthonormal")
        if abs(abs(self.amplitude_transfer) ** 2 + self.vacuum_fill - 1.0) > 1e-12:
            raise ValueError("vacuum fill must complement |t|^2")
        object.__setattr__(self, "conserved_mode", c)
        object.__setattr__(self, "lossy_mode", l)

    @property
    def basis(self) -> np.ndarray:
        """Orthogonal quadrature-space rotation into (conserved, lossy)."""
        c1, c2 = self.conserved_mode
        l1, l2 = self.lossy_mode
        return np.array([[c1, 0.0, c2, 0.0],
                         [0.0, c1, 0.0, c2],
                         [l1, 0.0, l2, 0.0],
                         [0.0, l1, 0.0, l2]])


def build_transfer(p: ModelParams, delta: float, z: float) -> TransferModel:
    """Transfer model for a slab of length z at analysis frequency delta."""
    w = math.sqrt(p.omega_quad)
    conserved = np.array([p.omega1 / w, p.omega2 / w])
    lossy = np.array([p.omega2 / w, -p.omega1 / w])
    qa_z = q_absorption(p, delta) * z
    qo_z = q_dispersion(p, delta) * z
    t = complex(math.exp(-qa_z) * math.cos(PHASE_SIGN * qo_z),
                -math.exp(-qa_z) * math.sin(PHASE_SIGN * qo_z))
    return TransferModel(conserved_mode=conserved, lossy_mode=lossy,
                         amplitude_transfer=t,
                         vacuum_fill=1.0 - math.exp(-2.0 * qa_z))


def propagate_covariance(model: TransferModel, cov: QuadCovariance) -> QuadCovariance:
    """Apply the slab transfer to a covariance in the field basis.

    Both quadrature components of the lossy sideband mode acquire the same
    complex amplitude t, so in the collective basis the channel is
    C -> A C A^dag + (1 - |t|^2) on the lossy block with A = diag(1,1,t,t):
    the conserved block is untouched, cross blocks pick up conj(t), and the
    lossy block relaxes toward vacuum.  Exact semigroup: two slabs compose
    to their sum, with the cross-block phase carried by the imaginary part.
    """
    rot = model.basis
    cm = rot @ cov.m @ rot.T
    t = model.amplitude_transfer
    surv = 1.0 - model.vacuum_fill
    cl = cm[:2, 2:] * t.conjugate()
    ll = surv * cm[2:, 2:] + model.vacuum_fill * np.eye(2)
    out = np.block([[cm[:2, :2], cl], [cl.conj().T, ll]])
    return QuadCovariance(rot.T @ out @ rot)


def covariance_at(p: ModelParams, delta: float, z: float) -> QuadCovariance:
    """Output covariance after distance z at analysis frequency delta."""
    return propagate_covariance(build_transfer(p, delta, z),
                                input_covariance(p.r, p.eta))


def cross_correlation(p: ModelParams, delta: float, z: float,
                      theta: float = 0.0) -> float:
    """Symmetrized cross-spectrum <delta Y1^theta delta Y2^theta>."""
    # amplitude pair sits at (0, 2), phase pair at (1, 3)
    idx = 0 if _effective_r(1.0, theta) > 0.0 else 1
    return float(covariance_at(p, delta, z).m[idx, 2 + idx].real)


def _check_phase_convention() -> None:
    """Covariance route must reproduce the closed form where the cross
    term's cosine sign matters; guards PHASE_SIGN edits."""
    p = ModelParams(omega1=1.0, omega2=OSCILLATION_RATIOS[0], r=1.0)
    delta, z = 0.31, 2.0
    rebuilt = covariance_at(p, delta, z).m[2, 2].real
    direct = full_spectrum_s22(p, delta, z)
    if abs(rebuilt - direct) > 1e-10:
        raise AssertionError(
            f"phase convention self-test failed: {rebuilt} vs {direct}")


_check_phase_convention()
