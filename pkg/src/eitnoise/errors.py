"""Typed errors raised by the eitnoise package.

Each class names the violated invariant so callers can branch on the
failure mode instead of parsing messages.
"""


class EitNoiseError(ValueError):
    """Base class for all package errors."""


class NonPositiveGamma(EitNoiseError):
    """The optical decay rate gamma must be strictly positive."""


class NonPositiveCoupling(EitNoiseError):
    """The coupling density (atom-field strength per length) must be positive."""


class NonPositiveKappa(EitNoiseError):
    """The hybrid-witness weight kappa must be strictly positive."""


class EtaOutOfRange(EitNoiseError):
    """The input preparation efficiency eta must lie in [0, 1]."""


class ZeroDrive(EitNoiseError):
    """Both Rabi frequencies vanish; the medium has no steady state."""


class CaseMismatch(EitNoiseError):
    """Parameters are inconsistent with the requested special-case formula."""


class RegimeError(EitNoiseError):
    """Closed-form witnesses are only available in the equal-drive regime."""


class NotSupported(EitNoiseError):
    """The requested quantity is outside the regime this model covers."""


class CertificateRequired(EitNoiseError):
    """Witness evaluation needs an established conservation certificate."""


class CarrierFrequency(EitNoiseError):
    """The requested quantity is undefined at the carrier (delta = 0)."""


class ConfigInvalid(EitNoiseError):
    """A Monte Carlo configuration field violates its bound."""
