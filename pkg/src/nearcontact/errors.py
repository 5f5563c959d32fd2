"""Exception hierarchy shared by every module."""


class NearContactError(Exception):
    """Base class for library errors."""


class DomainError(NearContactError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ConvergenceError(NearContactError, ArithmeticError):
    """A summation or quadrature did not reach its tolerance.

    ``partial`` carries whatever estimate was available when the budget ran out.
    """

    def __init__(self, message, partial=None, diagnostics=None):
        super().__init__(message)
        self.partial = partial
        self.diagnostics = diagnostics or {}


class ConfigurationError(NearContactError, LookupError):
    """Missing constant, recipe, or malformed configuration."""


class IncompleteInputError(NearContactError, ValueError):
    """An operation needs data (series, rows) that were not supplied."""
