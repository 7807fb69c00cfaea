class TwoQubitError(Exception):
    """Base class for errors raised by this package"""


class DomainError(TwoQubitError, ValueError):
    """An argument is outside the domain of the operation"""


class ValidationError(TwoQubitError, ValueError):
    """An object failed a structural or physical check

    ``report`` holds the positivity report or residual that triggered it, if any.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConfigurationError(TwoQubitError):
    """The run configuration cannot be used"""


class ConsistencyError(TwoQubitError):
    """An internal invariant did not hold"""
