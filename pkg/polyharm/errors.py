"""Errors raised by the polyharmonic toolkit.

Every error carries the CLI exit code it maps to.
"""

from .const import EXIT_BAD_ARGS, EXIT_DOMAIN, EXIT_PARSE, EXIT_PROPERTY_FAILURE


class PolyharmError(Exception):
    """Base Error Class."""

    exit_code = EXIT_DOMAIN


class NotPolyharmonic(PolyharmError):
    """Function is not annihilated by the requested power of the laplacian."""


class NegativeExponent(PolyharmError):
    """Laurent term where a polynomial on the disk is required."""


class NotHarmonic(PolyharmError):
    """Function is not harmonic."""


class NotDivisible(PolyharmError):
    """Function is not divisible by the disk weight within its class."""


class BadIndex(PolyharmError):
    """Index out of range."""

    exit_code = EXIT_BAD_ARGS


class InvalidConfig(PolyharmError):
    """Run options or environment overrides failed validation."""

    exit_code = EXIT_BAD_ARGS


class DegenerateRadii(PolyharmError):
    """Interpolation radii are not strictly increasing in (0,1)."""

    exit_code = EXIT_BAD_ARGS


class RadiusViolation(PolyharmError):
    """Evaluation point outside the innermost interpolation circle."""


class SingularPoint(PolyharmError):
    """Evaluation at a singular point of a kernel."""


class NonIntegrable(PolyharmError):
    """Boundary exponent does not give an integrable weight."""


class ToleranceNotReached(PolyharmError):
    """Requested tolerance not met; best value and error estimate attached."""

    def __init__(self, message: str, value: float, estimate: float) -> None:
        """Initialize with the best available value."""
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class ParseError(PolyharmError):
    """Malformed input document."""

    exit_code = EXIT_PARSE


class PostconditionFailed(PolyharmError):
    """An asserted postcondition did not hold."""

    exit_code = EXIT_PROPERTY_FAILURE
