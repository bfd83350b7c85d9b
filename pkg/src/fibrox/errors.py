"""Exception hierarchy shared by the library and the CLI."""


class FibroxError(Exception):
    """Base class for every error raised by fibrox."""


class DimensionError(FibroxError, ValueError):
    """Two monomials live in polynomial rings with different variable counts."""


class DegreeMismatchError(FibroxError, ValueError):
    pass


class UnsupportedInputError(FibroxError, ValueError):
    """Input is outside what the library handles (e.g. not equigenerated)."""


class PreconditionError(FibroxError, ValueError):
    """An operation's precondition is violated; ``witness`` explains why."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundExceededError(FibroxError, RuntimeError):
    """A resource cap (fiber enumeration size, degree bound, ...) was hit."""


class DivergenceError(FibroxError, RuntimeError):
    pass


class ParseError(FibroxError, ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message
