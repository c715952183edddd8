"""Exception hierarchy shared by every module of the package."""


class GASVDError(Exception):
    """Base class for all errors raised by gasvd."""


class ContextMismatch(GASVDError, ValueError):
    pass


class ComplexScalarInRealContext(GASVDError, TypeError):
    pass


class GradeOutOfRange(GASVDError, ValueError):
    pass


class UnsupportedDimension(GASVDError, ValueError):
    pass


class SizeMismatch(GASVDError, ValueError):
    pass


class NotSquare(SizeMismatch):
    pass


class RingMismatch(GASVDError, TypeError):
    pass


class NegativeDiagonal(GASVDError, ValueError):
    pass


class NoConvergence(GASVDError, ArithmeticError):
    """Jacobi sweeps exhausted before the column Gram matrix became diagonal."""


class InternalInvariantViolation(GASVDError, RuntimeError):
    """A structural invariant failed; indicates a bug rather than bad input."""
