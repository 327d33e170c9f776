"""Quadrature-noise propagation of entangled twin beams through an EIT
medium: analytic spectra, covariance transfer, entanglement witnesses,
and a Monte Carlo validation oracle."""

__version__ = "0.1.0"

from .errors import (
    CarrierFrequency,
    CaseMismatch,
    CertificateRequired,
    ConfigInvalid,
    EitNoiseError,
    EtaOutOfRange,
    NonPositiveCoupling,
    NonPositiveGamma,
    NonPositiveKappa,
    NotSupported,
    RegimeError,
    ZeroDrive,
)
from .model import (
    GridPoint,
    ModelParams,
    QuadCovariance,
    input_covariance,
    steady_state_coherence,
    validate_params,
)
from .spectra import (
    SpecialCase,
    TransferModel,
    build_transfer,
    covariance_at,
    cross_correlation,
    full_spectrum_s11,
    full_spectrum_s22,
    propagate_covariance,
    q_absorption,
    q_dispersion,
    quadrature_spectrum,
    special_case_spectrum,
    spectrum_from_propagation,
)
from .witness import (
    Convention,
    WitnessReport,
    collective_dipole_variances,
    conservation_certificate,
    covariance_witness_at,
    genuine_verdict,
    onset_distance,
    to_convention,
    vertex_gain,
    witness_closed_form,
    witness_from_covariance,
)
from .oracle import (
    OracleConfig,
    ValidationEntry,
    ValidationReport,
    draw_input_samples,
    propagate_samples,
    report_json,
    simulate_covariance,
    validate_config,
    validate_grid,
)
from .runner import (
    CSV_COLUMNS,
    FIGURE_NAMES,
    SCHEMA_VERSION,
    SWEEP_AXES,
    SweepSpec,
    format_cell,
    generate_figure,
    generate_sweep,
    oscillation_detuning,
    rows_to_csv,
    spec_from_sidecar,
    validate_sweep,
    validation_preset,
)

__all__ = [name for name in dir() if not name.startswith("_")]
