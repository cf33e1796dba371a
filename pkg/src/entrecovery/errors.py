"""Exception types for domain violations.

Everything derives from ValueError so callers that don't care about the
fine-grained reason can catch a single class.
"""


class InputDomainError(ValueError):
    """Base class for all rejected inputs."""


class EmptyInputError(InputDomainError):
    """A spectrum was built from zero weights."""


class NegativeWeightError(InputDomainError):
    """A spectrum entry is negative beyond tolerance."""


class NotNormalizedError(InputDomainError):
    """Spectrum weights do not sum to 1 within tolerance."""


class OutOfRangeError(InputDomainError):
    """A scalar parameter lies outside its admissible interval."""


class ResolutionTooLargeError(InputDomainError):
    """Requested grid resolution exceeds the supported maximum."""
