"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the region where an operation is defined."""


class ConvergenceError(ArithmeticError):
    """A series hit its term cap before the stopping rule fired."""
