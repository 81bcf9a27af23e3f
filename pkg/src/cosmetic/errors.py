"""Exception hierarchy shared by the modules and mapped to CLI exit codes."""


class CosmeticError(Exception):
    """Base class for all errors raised by this package."""


class ComplexFormatError(CosmeticError, ValueError):
    """The input document is not a well-formed complex."""


class ComplexValidationError(CosmeticError, ValueError):
    """A complex violates a grading law or d^2 = 0."""

    def __init__(self, violations):
        self.violations = list(violations)
        head = self.violations[0] if self.violations else "invalid complex"
        more = len(self.violations) - 1
        msg = str(head) if more <= 0 else f"{head} (+{more} more)"
        super().__init__(msg)


class DecompositionError(CosmeticError):
    """The reduced complex does not split into one staircase plus acyclic pieces."""


class InvariantViolation(CosmeticError):
    """An internal consistency check failed (e.g. hook rank < 1, n_s != n_-s)."""


class UnsupportedProfile(CosmeticError, ValueError):
    """The requested computation needs a box-class profile with epsilon = 0."""
