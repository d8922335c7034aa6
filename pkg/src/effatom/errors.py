"""Exception types shared across the package."""


class EffatomError(Exception):
    """Base class for all package-specific errors."""


class InvalidConfigurationError(EffatomError, ValueError):
    """Raised for malformed configuration strings or impossible occupancies."""


class UnoccupiedSubshellError(EffatomError, ValueError):
    """Raised when an operation targets a subshell with zero occupancy."""


class InfeasibleSearchError(EffatomError, ValueError):
    """Raised when the requested electron count cannot fit in the search space."""


class CalibrationError(EffatomError, ValueError):
    """Raised when a calibration target has no root in the admissible range."""


class NumericalError(EffatomError, RuntimeError):
    """Raised when a quadrature fails to reach its requested tolerance."""
