"""Exception types raised across the package."""


class StopsatError(Exception):
    """Base class for all package errors."""


class DomainError(StopsatError, ValueError):
    """A value lies outside its admissible range.

    ``rank`` is the 1-based rank of the offending entry when the error
    comes from a per-rank schedule, otherwise ``None``.
    """

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class StructuralError(StopsatError, ValueError):
    """Inputs have incompatible shapes (e.g. schedules of different length)."""


class UndefinedMetricError(StopsatError):
    """The metric has no value for this input (AP with no relevant documents)."""


class ConfigurationError(StopsatError, ValueError):
    """A metric configuration is incomplete or inconsistent."""


class ParseError(StopsatError, ValueError):
    """A qrels, run or report file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnjudgedDocumentError(StopsatError):
    """A retrieved document has no judgment and the policy forbids that."""
