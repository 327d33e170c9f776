"""Parameter validation and input-state covariance."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frozen
from eitnoise import (
    EtaOutOfRange,
    GridPoint,
    ModelParams,
    NonPositiveCoupling,
    NonPositiveGamma,
    NonPositiveKappa,
    QuadCovariance,
    ZeroDrive,
    input_covariance,
    steady_state_coherence,
    validate_params,
)


class TestValidateParams:
    def test_accepts_reference_point(self):
        p = validate_params(ModelParams(omega1=1, omega2=1, gamma=1, r=1))
        assert p.gamma == 1.0

    def test_normalizes_rates_by_gamma(self):
        p = validate_params(ModelParams(omega1=3.0, omega2=-1.0, gamma=2.0,
                                        coupling_density=4.0, gamma1=0.2))
        assert p.gamma == 1.0
        assert p.omega1 == 1.5
        assert p.omega2 == -0.5
        assert p.coupling_density == 2.0
        assert p.gamma1 == 0.1

    @given(gamma=st.floats(0.5, 5.0), om1=st.floats(-3, 3), om2=st.floats(0.1, 3))
    @settings(max_examples=50)
    def test_idempotent(self, gamma, om1, om2):
        once = validate_params(ModelParams(omega1=om1, omega2=om2, gamma=gamma))
        assert validate_params(once) == once

    @pytest.mark.parametrize("kwargs,exc", [
        (dict(omega1=1, omega2=1, gamma=0.0), NonPositiveGamma),
        (dict(omega1=1, omega2=1, gamma=-1.0), NonPositiveGamma),
        (dict(omega1=1, omega2=1, coupling_density=0.0), NonPositiveCoupling),
        (dict(omega1=1, omega2=1, kappa=0.0), NonPositiveKappa),
        (dict(omega1=1, omega2=1, eta=1.2), EtaOutOfRange),
        (dict(omega1=1, omega2=1, eta=-0.1), EtaOutOfRange),
        (dict(omega1=0.0, omega2=0.0), ZeroDrive),
    ])
    def test_rejects_invalid(self, kwargs, exc):
        with pytest.raises(exc):
            validate_params(ModelParams(**kwargs))

    def test_single_drive_is_allowed(self):
        validate_params(ModelParams(omega1=1.0, omega2=0.0))
        validate_params(ModelParams(omega1=0.0, omega2=-2.0))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            validate_params(ModelParams(omega1=math.nan, omega2=1.0))


class TestInputCovariance:
    def test_reference_values(self):
        cov = input_covariance(r=1.0, eta=1.0)
        assert cov.m[0, 0] == pytest.approx(frozen.DIAG_R1, abs=1e-12)
        assert cov.m[0, 2] == pytest.approx(-frozen.CROSS_R1, abs=1e-12)
        assert cov.m[1, 3] == pytest.approx(+frozen.CROSS_R1, abs=1e-12)
        assert cov.m[0, 1] == 0.0 and cov.m[0, 3] == 0.0

    def test_eta_zero_is_vacuum(self):
        for r in (0.0, 0.7, 3.0, -2.0):
            assert np.array_equal(input_covariance(r, 0.0).m, np.eye(4))

    @given(r=st.floats(-5, 5), eta=st.floats(0, 1))
    @settings(max_examples=100)
    def test_physical_for_all_r_eta(self, r, eta):
        cov = input_covariance(r, eta)
        assert cov.is_physical(tol=1e-9)
        # also positive semidefinite on its own
        assert np.linalg.eigvalsh(cov.m)[0] >= -1e-12

    def test_rejects_eta_outside_unit_interval(self):
        with pytest.raises(EtaOutOfRange):
            input_covariance(1.0, 1.5)

    def test_normally_ordered_variance_subtracts_vacuum(self):
        cov = QuadCovariance.vacuum()
        w = np.array([1.0, 0.0, -2.0, 0.0])
        assert cov.normally_ordered_variance(w) == pytest.approx(0.0, abs=1e-15)


class TestSteadyStateCoherence:
    def test_equal_drives(self):
        p = ModelParams(omega1=1.0, omega2=1.0)
        assert steady_state_coherence(p) == -0.5

    def test_two_to_one(self):
        p = ModelParams(omega1=1.0, omega2=2.0)
        assert steady_state_coherence(p) == pytest.approx(frozen.COHERENCE_1_2, abs=1e-15)

    def test_single_drive_gives_zero(self):
        assert steady_state_coherence(ModelParams(omega1=1.0, omega2=0.0)) == 0.0

    # magnitudes bounded away from the subnormal range where W^2 underflows
    @given(om1=st.floats(-3, 3), om2=st.floats(-3, 3))
    @settings(max_examples=100)
    def test_bounded_by_half(self, om1, om2):
        if abs(om1) < 1e-6 and abs(om2) < 1e-6:
            return
        c = steady_state_coherence(ModelParams(omega1=om1, omega2=om2))
        assert abs(c) <= 0.5 + 1e-12

    def test_zero_drive_raises(self):
        with pytest.raises(ZeroDrive):
            steady_state_coherence(ModelParams(omega1=0.0, omega2=0.0))


class TestGridPoint:
    def test_rejects_negative_distance(self):
        with pytest.raises(ValueError):
            GridPoint(z=-1.0, delta=0.5)

    def test_carries_coordinates(self):
        pt = GridPoint(z=2.0, delta=-0.5)
        assert (pt.z, pt.delta) == (2.0, -0.5)
