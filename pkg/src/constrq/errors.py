"""Exception types shared across the package."""


class InvariantViolation(ValueError):
    """A mathematical invariant or precondition failed.

    Raised when validated data (group tables, representations, symplectic
    forms, Gram matrices, ...) breaks its contract.  The CLI maps this to
    exit code 2.
    """


class SpecFileError(ValueError):
    """A problem-specification file is malformed or inconsistent.

    The CLI maps this to exit code 1 (usage-level failure).
    """
