"""Exception types shared across the package."""


class EsnBenchError(Exception):
    """Base class for all package errors."""


class InvalidRangeError(EsnBenchError, ValueError):
    """A numeric argument is outside its documented domain."""


class DimensionMismatchError(EsnBenchError, ValueError):
    """Array shapes are incompatible for the requested operation."""


class StateOverflowError(EsnBenchError, RuntimeError):
    """A reservoir state magnitude exceeded the overflow limit while driving."""

    def __init__(self, step: int, magnitude: float):
        self.step = step
        self.magnitude = magnitude
        super().__init__(f"state magnitude {magnitude:.3g} exceeded limit at step {step}")


class SpectralEstimateError(EsnBenchError, RuntimeError):
    """Spectral radius estimation did not converge within the iteration cap."""


class IntegrationError(EsnBenchError, RuntimeError):
    """A numerical integration produced non-finite values."""


class RegenerationExhaustedError(EsnBenchError, RuntimeError):
    """A task generator kept diverging after the maximum number of attempts."""


class DegenerateVarianceError(EsnBenchError, ValueError):
    """A metric denominator variance is numerically zero."""


class ConfigError(EsnBenchError, ValueError):
    """An experiment configuration is malformed."""
