"""Exception types shared across the package."""


class FormatError(ValueError):
    """A text input (graph, partition, or addressing file) is malformed.

    Carries the 1-based line number of the first offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(ValueError):
    """An argument violates a documented precondition."""


class NotSplitError(ValueError):
    """The closed form was asked about a graph that is not split."""


class LimitExceeded(ValueError):
    """An input exceeds a configured size limit."""
