"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument violates an operation's documented domain."""


class AccuracyError(RuntimeError):
    """A quadrature failed to reach its error target within budget.

    The best available estimate is kept so callers can still inspect it.
    """

    def __init__(self, message: str, estimate: float | None = None,
                 achieved: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.achieved = achieved


class IntegrityError(RuntimeError):
    """A structural assumption failed at runtime (e.g. root bracketing)."""
