"""Exception types raised across the corona-spectra package."""


class GraphValidationError(ValueError):
    """Raised for malformed graphs, edge lists and family specs."""


class PoleError(ValueError):
    """Raised when a coronal or determinant is evaluated at (or near) a pole."""


class RegularityError(ValueError):
    """Raised when an operation that needs a regular graph receives another."""


class CospectralPreconditionError(ValueError):
    """Raised when seed graphs fail the cospectral construction hypotheses."""


class FormulaCountError(RuntimeError):
    """Raised when a closed-form prediction violates its own bookkeeping.

    The message names the eigenvalue family that broke the invariant so the
    CLI can surface it as an internal error.
    """

    def __init__(self, message: str, family: str = "unknown"):
        super().__init__(message)
        self.family = family
