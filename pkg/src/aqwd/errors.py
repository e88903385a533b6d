"""Exception types raised across the package."""


class GridError(ValueError):
    """Two signals or maps do not share a sampling grid, or a grid is too small."""


class AlignmentError(ValueError):
    """A shift fixture does not land on grid points."""


class RegimeError(ValueError):
    """The parameter set is outside the regime an operation is defined for."""


class FitError(ValueError):
    """Line fitting is impossible for the supplied points."""


class PreconditionError(ValueError):
    """A documented precondition (e.g. f(0) != 0) does not hold."""
