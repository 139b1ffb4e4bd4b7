"""Exception types shared by the whole package."""


class KernelogicError(Exception):
    """Base class for all errors raised by kernelogic."""


class ValidationError(KernelogicError):
    """An input value breaks a documented precondition or invariant."""


class ParseError(KernelogicError):
    """Malformed textual input. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line:
            return f"line {self.line}, column {self.column}: {msg}"
        return msg


class ResourceLimitError(KernelogicError):
    """A configured size cap (atom count, clause count) was exceeded."""
