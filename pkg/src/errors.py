"""
Exception hierarchy shared by the numerical library and the CLI.

The CLI maps DomainError and InputFormatError to exit status 2 and
OSError to exit status 1.
"""


class FracVarError(Exception):
    """Base class for all library errors."""


class DomainError(FracVarError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class PoleError(DomainError):
    """Gamma evaluated at a non-positive integer."""


class GammaOverflowError(FracVarError, OverflowError):
    """|Gamma(x)| exceeds the double-precision range."""


class DivergenceError(DomainError):
    """A series is evaluated where it is known to diverge."""


class NonConvergenceError(FracVarError, RuntimeError):
    """A series hit its term cap before reaching the requested tolerance."""

    def __init__(self, message: str, terms: int):
        super().__init__(message)
        self.terms = terms


class IndexRangeError(FracVarError, IndexError):
    """A node index lies outside the range an operator accepts."""


class BoundaryConditionError(DomainError):
    """Sampled function violates y(a) = y(b) = 0."""


class GridTooCoarseError(DomainError):
    """Grid has fewer steps than an operation requires."""


class SolutionNotExistError(DomainError):
    """The C-RL closed form is requested at an order where it diverges."""

    def __init__(self, alpha: float):
        super().__init__("solution does not exist for alpha <= 0.5")
        self.alpha = alpha


class InputFormatError(FracVarError, ValueError):
    """An input sample file cannot be parsed or is not on a uniform grid."""
