"""Tri-partite entanglement witnesses for the two fields and the medium.

Three sum-variance witnesses are tracked: i1 between the two fields, i2
between the control field and the collective atomic dipoles (with gain h2
on the probe), i3 between the probe and the atoms (gain h1 on the
control).  Negative normally ordered thresholds certify entanglement, and
a sum below -(6 + 2 kappa) certifies genuine tri-partite entanglement.

Two evaluation routes are provided and must agree: closed forms in the
equal-drive regime and direct evaluation of a propagated covariance.  The
quoted closed forms embed the opposite sign of the input cross
correlation, so the covariance route tries both signs of each gain and
keeps the minimum, recording its choice.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import (
    CarrierFrequency,
    CertificateRequired,
    NotSupported,
    RegimeError,
)
from .model import ModelParams, QuadCovariance, input_covariance
from .spectra import covariance_at, q_absorption


class Convention(enum.Enum):
    """Normalization of witness values and thresholds.

    NORMALLY_ORDERED subtracts the vacuum contribution (thresholds 0 and
    1 - kappa, genuine below -6 - 2 kappa).  ABSOLUTE keeps it (all
    pairwise thresholds 4, genuine below 4).  The two differ by exact
    affine offsets, so verdicts never depend on the convention.
    """

    NORMALLY_ORDERED = "normally_ordered"
    ABSOLUTE = "absolute"


@dataclass(frozen=True)
class WitnessReport:
    """Witness values, thresholds, and verdicts at one propagation point."""

    i1: float
    i2: float
    i3: float
    sum_i: float
    h1: float
    h2: float
    kappa: float
    convention: Convention
    t_pair: float
    t_hybrid: float
    t_genuine: float
    fields_entangled: bool
    control_atom_entangled: bool
    probe_atom_entangled: bool
    genuine_tripartite: bool
    # signs applied to (h1, h2) by the covariance route; None for closed forms
    h_signs: Optional[tuple[int, int]] = None


def _thresholds(kappa: float, convention: Convention) -> tuple[float, float, float]:
    if convention is Convention.NORMALLY_ORDERED:
        return 0.0, 1.0 - kappa, -6.0 - 2.0 * kappa
    return 4.0, 4.0, 4.0


def _build_report(i1: float, i2: float, i3: float, h1: float, h2: float,
                  kappa: float, convention: Convention,
                  h_signs: Optional[tuple[int, int]] = None) -> WitnessReport:
    t_pair, t_hybrid, t_genuine = _thresholds(kappa, convention)
    s = i1 + i2 + i3
    return WitnessReport(
        i1=i1, i2=i2, i3=i3, sum_i=s, h1=h1, h2=h2, kappa=kappa,
        convention=convention, t_pair=t_pair, t_hybrid=t_hybrid,
        t_genuine=t_genuine,
        fields_entangled=i1 < t_pair,
        control_atom_entangled=i2 < t_hybrid,
        probe_atom_entangled=i3 < t_hybrid,
        genuine_tripartite=s < t_genuine,
        h_signs=h_signs,
    )


def _ab(r: float) -> tuple[float, float]:
    """Antisqueezing and squeezing excess halves, A > 0 > B for r > 0."""
    return (math.expm1(2.0 * r) / 2.0, math.expm1(-2.0 * r) / 2.0)


def witness_closed_form(p: ModelParams, x: float, h1: float = -3.0,
                        h2: float = -3.0) -> WitnessReport:
    """Witnesses at dimensionless distance x = z q_a in the equal-drive regime.

    i1 = eta [ (2 e^{-2r} - 2) e^{-2x} + 2 e^{-2r} - 2 ]
    i2 = eta [ ((e^{2r}-1)(1+h2)^2/2 + (e^{-2r}-1)/2) e^{-2x}
               + (e^{-2r}-1)(1-h2)^2/2 + (e^{2r}-1)/2 ]
    i3 = the same form with h1.

    All normally ordered moments scale linearly in the preparation
    efficiency, hence the overall eta factor.
    """
    if not math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0):
        raise RegimeError("closed-form witnesses require omega1 == omega2")
    if x < 0:
        raise ValueError(f"dimensionless distance must be >= 0, got {x}")
    a, b = _ab(p.r)
    t2 = math.exp(-2.0 * x)
    i1 = p.eta * (4.0 * b * t2 + 4.0 * b)

    def hybrid(h: float) -> float:
        return p.eta * ((a * (1.0 + h) ** 2 + b) * t2
                        + b * (1.0 - h) ** 2 + a)

    return _build_report(i1, hybrid(h2), hybrid(h1), h1, h2, p.kappa,
                         Convention.NORMALLY_ORDERED)


# quadrature combinations entering the three witnesses, basis
# (Y1^0, Y1^{pi/2}, Y2^0, Y2^{pi/2})
_W_PHASE_DIFF = np.array([0.0, 1.0, 0.0, -1.0])
_W_AMP_SUM = np.array([1.0, 0.0, 1.0, 0.0])


def conservation_certificate(cov_in: QuadCovariance, cov_out: QuadCovariance,
                             tol: float = 1e-9,
                             mode: Optional[np.ndarray] = None) -> bool:
    """Check that the conserved collective quadratures are preserved.

    mode gives the conserved combination over (a1, a2); the default is the
    symmetric one of the equal-drive regime.  Both quadratures of the mode
    and their cross covariance must agree between input and output.
    """
    e = np.array([1.0, 1.0]) / math.sqrt(2.0) if mode is None else np.asarray(mode, float)
    w0 = np.array([e[0], 0.0, e[1], 0.0])
    wp = np.array([0.0, e[0], 0.0, e[1]])
    pairs = ((w0, w0), (wp, wp), (w0, wp))
    for wa, wb in pairs:
        # the off-diagonal pair is a bilinear (not quadratic) form, so it
        # may be complex; the channel must preserve it exactly
        before = complex(wa @ cov_in.m @ wb)
        after = complex(wa @ cov_out.m @ wb)
        if abs(after - before) > tol:
            return False
    return True


def witness_from_covariance(cov: QuadCovariance, h1: float = -3.0,
                            h2: float = -3.0, kappa: float = 1.0,
                            reference: Optional[QuadCovariance] = None,
                            certificate: Optional[bool] = None) -> WitnessReport:
    """Witnesses evaluated directly on a propagated covariance.

    The conservation certificate licenses the field-only expressions (the
    atomic contributions ride on the conserved mode): pass the input
    covariance as reference to have it checked here, or certificate=True
    if it was established elsewhere.  Both signs of each gain are tried
    and the smaller witness kept; the signs used are recorded.
    """
    if certificate is None:
        if reference is None:
            raise CertificateRequired(
                "pass reference (input covariance) or certificate=True")
        certificate = conservation_certificate(reference, cov)
    if not certificate:
        raise CertificateRequired("conservation certificate failed")

    def nvar(w: np.ndarray) -> float:
        return cov.normally_ordered_variance(w)

    i1 = nvar(_W_PHASE_DIFF) + nvar(_W_AMP_SUM)

    def hybrid(h: float, probe_gain: bool) -> float:
        if probe_gain:  # gain on the probe amplitude, control alone in phase
            return nvar(np.array([0.0, 1.0, 0.0, 0.0])) + nvar(np.array([1.0, 0.0, h, 0.0]))
        return nvar(np.array([0.0, 0.0, 0.0, 1.0])) + nvar(np.array([h, 0.0, 1.0, 0.0]))

    def signed_min(h: float, probe_gain: bool) -> tuple[float, int]:
        plus = hybrid(h, probe_gain)
        minus = hybrid(-h, probe_gain)
        return (plus, +1) if plus <= minus else (minus, -1)

    i2, s2 = signed_min(h2, probe_gain=True)
    i3, s1 = signed_min(h1, probe_gain=False)
    return _build_report(i1, i2, i3, h1, h2, kappa,
                         Convention.NORMALLY_ORDERED, h_signs=(s1, s2))


def covariance_witness_at(p: ModelParams, x: float, h1: float = -3.0,
                          h2: float = -3.0) -> WitnessReport:
    """Covariance-route witnesses at dimensionless distance x = z q_a.

    At equal drives the collective-basis input covariance is block
    diagonal, so the witnesses depend on the propagation only through
    x and any detuning with absorption realizes them; the absorption peak
    is used.  The conservation certificate is established against the
    input covariance before evaluation.
    """
    if not math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0):
        raise RegimeError("dimensionless-distance witnesses require "
                          "omega1 == omega2")
    if x < 0:
        raise ValueError(f"dimensionless distance must be >= 0, got {x}")
    delta = (p.omega1 + p.omega2) / 2.0
    qa = q_absorption(p, delta)
    cov = covariance_at(p, delta, x / qa)
    return witness_from_covariance(cov, h1, h2, p.kappa,
                                   reference=input_covariance(p.r, p.eta))


def genuine_verdict(report: WitnessReport) -> bool:
    """True iff the witness sum certifies genuine tri-partite entanglement."""
    return report.sum_i < report.t_genuine


def to_convention(report: WitnessReport, convention: Convention) -> WitnessReport:
    """Re-express a report in the other normalization (exact affine shift)."""
    if convention is report.convention:
        return report
    o_pair = 4.0
    o_hybrid = 3.0 + report.kappa
    sign = 1.0 if convention is Convention.ABSOLUTE else -1.0
    i1 = report.i1 + sign * o_pair
    i2 = report.i2 + sign * o_hybrid
    i3 = report.i3 + sign * o_hybrid
    t_pair, t_hybrid, t_genuine = _thresholds(report.kappa, convention)
    return replace(
        report, i1=i1, i2=i2, i3=i3, sum_i=i1 + i2 + i3,
        convention=convention, t_pair=t_pair, t_hybrid=t_hybrid,
        t_genuine=t_genuine)


def vertex_gain(r: float, x: float, eta: float = 1.0) -> Optional[tuple[float, float]]:
    """Gain minimizing the hybrid witness at distance x, when it exists.

    The witness is quadratic in the gain with leading coefficient
    (e^{2r}-1) e^{-2x}/2 + (e^{-2r}-1)/2, positive exactly for x < r;
    beyond that the quadratic opens downward and the vertex is a maximum,
    so None is returned.  Returns (h_star, witness value at h_star) in
    the closed-form sign convention.
    """
    if x >= r:
        return None
    a, b = _ab(r)
    t2 = math.exp(-2.0 * x)
    lead = a * t2 + b
    if lead <= 0.0:  # x just below r can still round to zero
        return None
    h_star = (b - a * t2) / lead
    value = eta * ((a * (1.0 + h_star) ** 2 + b) * t2
                   + b * (1.0 - h_star) ** 2 + a)
    return h_star, value


def onset_distance(p: ModelParams, delta: float) -> float:
    """Distance z* past which the optimal-gain witnesses certify genuine
    tri-partite entanglement.

    The vertex-minimized hybrid witness crosses zero at
    x* = arccosh(cosh 2r - 2)/2, which exists only for cosh 2r > 3
    (r above about 0.8814); below that the witness is negative from the
    start and 0 is returned.  Converted to physical distance with
    q_a(delta); where the lossy mode does not decay the onset never
    happens and CarrierFrequency is raised.
    """
    qa = q_absorption(p, delta)
    if qa == 0.0:
        raise CarrierFrequency(
            "q_a vanishes at the carrier; no onset exists at delta = 0")
    c = math.cosh(2.0 * p.r)
    if c <= 3.0:
        return 0.0
    return math.acosh(c - 2.0) / (2.0 * qa)


def collective_dipole_variances(p: ModelParams) -> tuple[float, float]:
    """Normally ordered variances of the two collective atomic dipole
    quadratures in the steady state.

    In the equal-drive dark state the atomic fluctuations decouple and
    both variances vanish identically; other drive ratios are outside
    this model.
    """
    if not math.isclose(p.omega1, p.omega2, rel_tol=1e-12, abs_tol=0.0):
        raise NotSupported(
            "collective dipole variances are only available at omega1 == omega2")
    return (0.0, 0.0)
