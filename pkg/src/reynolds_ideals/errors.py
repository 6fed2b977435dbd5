"""Exceptions shared across the package."""

__all__ = ["InvariantViolation"]


class InvariantViolation(RuntimeError):
    """A mathematical invariant the pipeline relies on failed to hold.

    Raised when internal cross-checks fail (a well-definedness check, a
    containment that theory guarantees, an ideal property, ...).  This
    always indicates a bug or corrupted input data, never a normal
    error condition; the CLI maps it to exit code 2.
    """
