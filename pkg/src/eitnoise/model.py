"""Model parameters and quadrature covariance containers.

Conventions used throughout the package:

* Quadratures are Y^theta = a e^{-i theta} + a^dag e^{i theta}, so
  [Y^0, Y^{pi/2}] = 2i and a coherent state has unit variance in every
  quadrature.
* Covariance matrices are real, symmetrized, 4x4, ordered
  (Y1^0, Y1^{pi/2}, Y2^0, Y2^{pi/2}) where field 1 drives the control
  transition and field 2 the probe transition.
* All rates (Rabi frequencies, detunings, propagation constants) are
  expressed in units of the optical decay rate gamma after validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    EtaOutOfRange,
    NonPositiveCoupling,
    NonPositiveGamma,
    NonPositiveKappa,
    ZeroDrive,
)

# Commutation matrix: [x_a, x_b] = 2i Omega_ab for the quadrature vector
# above.  Physical covariances satisfy C + i SYMPLECTIC >= 0.
_J = np.array([[0.0, 1.0], [-1.0, 0.0]])
SYMPLECTIC = np.block([[_J, np.zeros((2, 2))], [np.zeros((2, 2)), _J]])


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the twin-beam EIT propagation problem.

    omega1, omega2  signed Rabi frequencies of the control (field 1) and
                    probe (field 2) transitions
    gamma           optical coherence decay rate; sets the unit system
    gamma1, gamma2  ground-state dephasings, validated but not used by the
                    lossless propagation constants (the model treats the
                    two-photon resonance as dephasing-free)
    coupling_density  atom-field coupling strength per unit length, the
                    prefactor of both propagation constants
    r               squeezing parameter of the entangled input pair
    eta             preparation efficiency of the input state, in [0, 1]
    kappa           weight of the hybrid entanglement witnesses
    """

    omega1: float
    omega2: float
    gamma: float = 1.0
    gamma1: float = 0.0
    gamma2: float = 0.0
    coupling_density: float = 1.0
    r: float = 0.0
    eta: float = 1.0
    kappa: float = 1.0

    @property
    def omega_quad(self) -> float:
        """W^2 = Omega1^2 + Omega2^2, the squared collective drive."""
        return self.omega1 ** 2 + self.omega2 ** 2


def validate_params(p: ModelParams) -> ModelParams:
    """Check invariants and re-express all rates in units of gamma.

    Returns a new ModelParams with gamma = 1.  Idempotent: validating an
    already validated instance returns an equal instance.
    """
    for name in ("omega1", "omega2", "gamma", "gamma1", "gamma2",
                 "coupling_density", "r", "eta", "kappa"):
        v = getattr(p, name)
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")
    if not p.gamma > 0:
        raise NonPositiveGamma(f"gamma must be > 0, got {p.gamma}")
    if not p.coupling_density > 0:
        raise NonPositiveCoupling(
            f"coupling_density must be > 0, got {p.coupling_density}")
    if not p.kappa > 0:
        raise NonPositiveKappa(f"kappa must be > 0, got {p.kappa}")
    if not 0.0 <= p.eta <= 1.0:
        raise EtaOutOfRange(f"eta must lie in [0, 1], got {p.eta}")
    if p.omega1 == 0.0 and p.omega2 == 0.0:
        raise ZeroDrive("omega1 and omega2 cannot both vanish")
    if p.gamma1 < 0 or p.gamma2 < 0:
        raise ValueError("ground-state dephasings must be >= 0")
    g = p.gamma
    return replace(
        p,
        omega1=p.omega1 / g,
        omega2=p.omega2 / g,
        gamma=1.0,
        gamma1=p.gamma1 / g,
        gamma2=p.gamma2 / g,
        coupling_density=p.coupling_density / g,
    )


@dataclass(frozen=True)
class GridPoint:
    """A single evaluation point: propagation distance z and detuning delta."""

    z: float
    delta: float

    def __post_init__(self) -> None:
        if self.z < 0:
            raise ValueError(f"propagation distance must be >= 0, got {self.z}")


@dataclass(frozen=True)
class QuadCovariance:
    """Hermitian covariance of the quadrature 4-vector at one analysis frequency.

    Away from the carrier the quadratures are sideband combinations with
    Y(delta)^dag = Y(-delta), so <delta Y_a delta Y_b^dag> is Hermitian
    rather than symmetric.  The real part holds the symmetrized spectra
    and cross-correlations; the antisymmetric imaginary part records the
    dispersive phase between the collective modes, invisible in one-shot
    spectra but required for slab composition.  Input states and z = 0
    outputs are purely real, and such matrices are stored with real dtype.
    """

    m: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.m)
        if m.shape != (4, 4):
            raise ValueError(f"covariance must be 4x4, got {m.shape}")
        if not np.allclose(m, m.conj().T, atol=1e-9):
            raise ValueError("covariance must be Hermitian")
        if np.iscomplexobj(m):
            if not m.imag.any():
                m = m.real.copy()
        else:
            m = m.astype(float)
        object.__setattr__(self, "m", m)

    def variance(self, w: np.ndarray) -> float:
        """Variance of the real combination w . Y."""
        w = np.asarray(w, dtype=float)
        return float((w @ self.m @ w).real)

    def normally_ordered_variance(self, w: np.ndarray) -> float:
        """<: (Delta w.Y)^2 :> = Var(w.Y) - |w|^2 (vacuum contribution)."""
        w = np.asarray(w, dtype=float)
        return float((w @ self.m @ w).real - w @ w)

    def min_physical_eigenvalue(self) -> float:
        """Smallest eigenvalue of C + i SYMPLECTIC; >= 0 for physical states."""
        h = self.m + 1j * SYMPLECTIC
        return float(np.linalg.eigvalsh(h)[0].real)

    def is_physical(self, tol: float = 1e-9) -> bool:
        """Uncertainty-principle check with numerical slack tol."""
        return self.min_physical_eigenvalue() >= -tol

    @classmethod
    def vacuum(cls) -> "QuadCovariance":
        return cls(np.eye(4))


def input_covariance(r: float, eta: float = 1.0) -> QuadCovariance:
    """Covariance of the two-mode squeezed input with efficiency eta.

    Diagonal entries are 1 + 2 eta sinh^2 r; the amplitude quadratures are
    anticorrelated and the phase quadratures correlated with magnitude
    eta sinh 2r.  eta = 0 gives vacuum for any r.
    """
    if not 0.0 <= eta <= 1.0:
        raise EtaOutOfRange(f"eta must lie in [0, 1], got {eta}")
    d = 1.0 + 2.0 * eta * math.sinh(r) ** 2
    c = eta * math.sinh(2.0 * r)
    m = np.diag([d, d, d, d])
    m[0, 2] = m[2, 0] = -c
    m[1, 3] = m[3, 1] = +c
    return QuadCovariance(m)


def steady_state_coherence(p: ModelParams) -> float:
    """Ground-state coherence <sigma_21> = -Omega1 Omega2 / W^2.

    Equals -1/2 at equal drives and 0 when either drive vanishes.
    """
    w2 = p.omega_quad
    if w2 == 0.0:
        raise ZeroDrive("omega1 and omega2 cannot both vanish")
    return -p.omega1 * p.omega2 / w2
