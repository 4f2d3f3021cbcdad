"""Shared exception types and warning categories."""


class InvalidArgumentError(ValueError):
    """Raised for non-finite or otherwise malformed numeric input."""


class DomainError(ValueError):
    """Raised when an argument lies outside a function's mathematical domain."""


class UnsupportedParametersError(ValueError):
    """Raised for parameter combinations the implementation deliberately rejects."""


class StiffnessError(RuntimeError):
    """ODE step-size underflow.  Carries the time reached before failure."""

    def __init__(self, message, t_reached=None):
        super().__init__(message)
        self.t_reached = t_reached


class DiscretizationError(RuntimeError):
    """Raised when a discretization refinement loop fails to converge."""


class SignChangeError(RuntimeError):
    """A quantity assumed one-signed crossed zero.  Carries the crossing location."""

    def __init__(self, message, crossing=None):
        super().__init__(message)
        self.crossing = crossing


class OverflowFlag(RuntimeWarning):
    """Emitted when a value exceeds the representable range and +/-inf is returned."""
