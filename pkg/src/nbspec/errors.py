"""Exception types shared across the package."""


class NbspecError(Exception):
    """Base class for all package errors."""


class ParameterError(NbspecError):
    """An argument is outside its documented domain."""


class ContractError(NbspecError):
    """An input violates a structural precondition (e.g. non-symmetric matrix)."""


class ParseError(NbspecError):
    """A file could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ResourceError(NbspecError):
    """A computation was refused because it would exceed a size cap."""


class ConvergenceError(NbspecError):
    """An iterative solver failed to converge; carries the best residual seen."""

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual
