"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class DivergentTailError(DomainError):
    """The geometric tail ratio times the radius is not < 1."""


class PreconditionError(ValueError):
    """Input violates a standing hypothesis (e.g. the coefficient bound)."""


class TruncationCapError(RuntimeError):
    """A certified tolerance could not be met within the term cap.

    ``partial`` holds the last certified value reached before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NoRootError(RuntimeError):
    """No +/- sign change of the defining equation on the scan grid."""

    def __init__(self, message, grid_min=None, grid_max=None):
        super().__init__(message)
        self.grid_min = grid_min
        self.grid_max = grid_max


class ConsistencyError(RuntimeError):
    """Two independent evaluation routes disagree beyond tolerance."""
