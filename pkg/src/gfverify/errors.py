"""Exception types raised by the library."""


class GFError(Exception):
    """Base class for all library errors."""


class DomainError(GFError, ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(DomainError):
    """The function has a pole at the requested argument."""


class ConvergenceError(GFError, ArithmeticError):
    """An iterative procedure failed to reach its stopping criterion."""


class EvaluationError(GFError, ArithmeticError):
    """No admissible evaluation path exists for the requested argument."""
