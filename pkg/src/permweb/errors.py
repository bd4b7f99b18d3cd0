"""Exception types shared across the package."""


class PermwebError(Exception):
    """Base class for all library errors."""


class BoundaryError(PermwebError):
    """Source/target bases (or diagram boundaries) do not match."""


class DomainError(PermwebError):
    """Input outside the mathematical domain of the operation."""


class UnsupportedError(PermwebError):
    """Operation is deliberately out of scope in this context."""


class ParseError(PermwebError):
    """Syntax error in a textual format; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SizeGuardError(PermwebError):
    """A basis would exceed the configured size guard."""
