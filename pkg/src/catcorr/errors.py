"""Exception types shared across the package.

Everything derives from CatcorrError so callers (and the CLI) can catch
domain failures in one place without swallowing genuine bugs.
"""


class CatcorrError(Exception):
    """Base class for all validation failures raised by this package."""


class DomainError(CatcorrError, ValueError):
    """A parameter lies outside the domain a routine is defined on."""


class UnsupportedOverlapError(DomainError):
    """The requested coherent-state label produces a negative overlap,
    which the real-overlap formulas downstream cannot represent."""


class DivergentNormalizationError(CatcorrError, ValueError):
    """The balanced superposition is null (odd parity with unit overlap
    product), so its normalization diverges."""


class InvalidDensityError(CatcorrError, ValueError):
    """A matrix fails the density-matrix checks (shape, Hermiticity,
    unit trace, positivity within tolerance)."""
