"""Exception types shared across the package."""


class LawriskError(Exception):
    """Base class for all package errors."""


class DomainError(LawriskError, ValueError):
    """An input violates a documented precondition or invariant."""


class NonIntegrableError(LawriskError, ArithmeticError):
    """A required integral diverges (or cannot be resolved at desk scale).

    ``sign`` records the direction of divergence when known: +1 for
    blow-up towards +inf, -1 towards -inf, 0 when undetermined.
    """

    def __init__(self, message: str, sign: int = 0):
        super().__init__(message)
        self.sign = sign


class OutsideOrliczSpaceError(NonIntegrableError):
    """Luxemburg-norm bracketing exhausted: the norm is effectively infinite."""


class SampleFileError(DomainError):
    """A sample file failed to parse; the message carries the line number."""
