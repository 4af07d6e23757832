"""Exception types shared across the package."""


class ColoringError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(ColoringError, ValueError):
    """A graph or coloring file could not be parsed."""


class InfeasibleParameters(ColoringError, ValueError):
    """Generator parameters admit no graph."""


class ImproperColoring(ColoringError):
    """An operation would leave two adjacent edges with the same color."""


class NotHappy(ColoringError):
    """A chain was augmented but its last edge has no free color."""


class PreconditionError(ColoringError, ValueError):
    """Inputs violate the documented contract of an algorithm."""


class InvariantError(ColoringError, AssertionError):
    """An internal invariant that the theory guarantees was broken.

    Raising this always indicates a bug; ``state`` carries whatever the
    raising site could collect for post-mortem inspection.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class StageStarvation(ColoringError):
    """The distributed simulator made no progress for too many stages."""
