"""Exception types shared across the package."""


class QwallError(Exception):
    """Base class for package errors."""


class InvalidArguments(QwallError, ValueError):
    """Arguments violate a documented precondition."""


class DomainError(QwallError, ValueError):
    """Evaluation requested at a singular point or on a branch cut."""


class AccuracyError(QwallError, RuntimeError):
    """A numerical routine cannot reach its accuracy target."""


class AccuracyWarning(UserWarning):
    """A numerical diagnostic exceeded its soft threshold."""


class DegenerateDenominator(QwallError, ZeroDivisionError):
    """A normalizing denominator vanished exactly.

    Carries the offending state pair so callers can record it.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
