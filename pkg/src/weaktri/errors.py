"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation was called on input violating its stated preconditions."""


class BudgetExceededError(RuntimeError):
    """An exhaustive sweep would exceed the caller-supplied element budget."""


class SpaceFileError(ValueError):
    """Malformed matrix-space file; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TheoremViolationError(RuntimeError):
    """A fact guaranteed by the underlying theory failed to hold at runtime.

    Any occurrence means either an implementation bug or a genuine
    counterexample; it is always raised, never swallowed.  ``trace`` carries
    the audit record accumulated up to the failure, when one exists.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
