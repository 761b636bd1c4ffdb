"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DivergenceError(ValueError):
    """A series was requested outside its radius of convergence."""


class NonconvergenceError(RuntimeError):
    """A series failed to meet its stop rule within the term budget.

    The partially accumulated result is attached as ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class CapacityError(ValueError):
    """Integrand degree exceeds what a quadrature grid integrates exactly."""
