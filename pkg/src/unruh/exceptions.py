"""
Error hierarchy for unruh-tangle.
"""


class UnruhTangleError(Exception):
    """Base class for every error raised by this package."""


class ParameterRangeError(UnruhTangleError, ValueError):
    """Acceleration parameter or sweep setting outside its allowed range."""


class ModeLabelError(UnruhTangleError, KeyError):
    """Mode label not present in the state's mode list."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class EmptySubsystemError(UnruhTangleError, ValueError):
    """Partial trace asked to keep no modes."""


class NormalizationError(UnruhTangleError, ValueError):
    """State vector is not unit norm."""


class NotHermitianError(UnruhTangleError, ValueError):
    """Matrix fails the Hermitian check."""


class ConvergenceError(UnruhTangleError, RuntimeError):
    """Jacobi iteration did not converge within the sweep budget."""


class ConsistencyError(UnruhTangleError, RuntimeError):
    """Two independent evaluations of the same quantity disagree."""


class UnknownQuantityError(UnruhTangleError, ValueError):
    """Sweep quantity name not recognized."""
