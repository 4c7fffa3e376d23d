"""Exception types shared across the package."""


class HypSeriesError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HypSeriesError, ValueError):
    """Input lies outside the domain where a series or relation is defined
    (e.g. a hyperbolic series evaluated on the imaginary axis)."""


class PrecisionError(HypSeriesError, ValueError):
    """Requested precision is too low, or the term cap was reached before
    the tail bound fell below the truncation target."""


class ParamError(HypSeriesError, ValueError):
    """Integer parameter outside the range where a relation holds."""


class ConvergenceError(HypSeriesError, RuntimeError):
    """Iterative root finding failed to reach the residual target."""


class RouteUnsupported(HypSeriesError, ValueError):
    """Unknown or inapplicable computation route for a coefficient table."""


class LengthMismatch(HypSeriesError, ValueError):
    """Argument list has the wrong length for the requested Bell polynomial."""
