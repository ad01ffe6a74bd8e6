"""Exception types shared across the package."""


class QbattError(Exception):
    """Base class for all package errors."""


class ValidationError(QbattError):
    """An input violates a structural precondition (shape, hermiticity, trace)."""


class ConfigurationError(QbattError):
    """Physical parameters are inconsistent or outside the operating regime."""


class CapacityError(QbattError):
    """A requested object exceeds the configured size limits."""


class CutoffError(QbattError):
    """The truncated oscillator basis is too small for the requested dynamics."""


class DomainError(QbattError):
    """A quantity is mathematically undefined for the given inputs."""


class NumericalError(QbattError):
    """A numerical routine failed to reach its accuracy target."""


class RepresentationError(QbattError):
    """The state is held in a representation the operation does not accept."""
