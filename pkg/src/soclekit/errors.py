"""Exception hierarchy shared across the package."""


class SocleKitError(Exception):
    """Base class for all package errors."""


class ParseError(SocleKitError):
    """Raised on malformed polynomial or specification text."""

    def __init__(self, message: str, line: int = 1, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DegenerateInputError(SocleKitError):
    """Raised when an input is structurally invalid (zero socle, zero sum)."""


class EnvelopeError(SocleKitError):
    """Raised when a request exceeds the supported (n, d) envelope."""


class BoundaryResolutionError(SocleKitError):
    """Raised when the sheaf-existence search fails to settle a value."""
