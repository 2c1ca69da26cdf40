"""Exception types shared across the package."""


class PolyrigidError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(PolyrigidError, ValueError):
    """A parameter is outside its documented range."""


class DimensionMismatchError(PolyrigidError, ValueError):
    """Vector or matrix dimensions are incompatible."""


class NotWellPositionedError(PolyrigidError, ValueError):
    """An operation requiring a well-positioned framework got one that is not."""


class InconsistentSystemError(PolyrigidError):
    """The affine system attached to a directed colouring has no solution.

    Raised by the witness search so the caller can discard the colouring;
    it is a control-flow signal, not a user error.
    """


class BudgetExceededError(PolyrigidError):
    """An enumeration exceeded its search budget."""


class FrameworkFileError(PolyrigidError, ValueError):
    """A framework file failed to parse or validate."""
