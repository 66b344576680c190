"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands have inconsistent or invalid dimensions."""


class DomainError(ValueError):
    """A point lies outside the domain of an operation (e.g. nonpositive
    fractional denominator)."""


class ConfigurationError(ValueError):
    """A solver or generator configuration is internally inconsistent."""


class ConvergenceError(RuntimeError):
    """An iterative routine hit its iteration cap.

    Carries the last iterate and value so callers can inspect how far the
    routine got.
    """

    def __init__(self, message, last_point=None, last_value=None):
        super().__init__(message)
        self.last_point = last_point
        self.last_value = last_value


class InstanceFormatError(ValueError):
    """An instance file is malformed; ``field`` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class GenerationError(RuntimeError):
    """Random instance generation exceeded its rejection budget."""

    def __init__(self, message, acceptance_rate=None):
        super().__init__(message)
        self.acceptance_rate = acceptance_rate
