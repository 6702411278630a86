"""Exception types raised across the package."""


class CpnotError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedSequenceError(CpnotError, ValueError):
    """Operation is only defined for sequences of pi pulses (odd length where noted)."""


class UnknownSequenceError(CpnotError, KeyError):
    """Requested catalog name does not exist."""


class SeriesError(CpnotError, RuntimeError):
    """Leading-order extraction failed."""


class IndeterminateOrderError(SeriesError):
    """Log-log slope did not lock onto an integer order."""


class InsufficientSignalError(SeriesError):
    """Too few infidelity samples above the double-precision floor."""


class SolverError(CpnotError, RuntimeError):
    """A design solve failed."""


class RootNotFoundError(SolverError):
    """Bracketing or refinement could not locate the requested root."""


class ConvergenceError(SolverError):
    """Optimizer converged, but the residual is not compatible with zero."""
