"""Exception types shared across the package."""


class WncError(Exception):
    """Base class for all toolkit errors."""


class InvalidSpecError(WncError, ValueError):
    """A ring construction request is malformed or exceeds the size cap."""


class UnsupportedOperationError(WncError):
    """The operation is undefined for this ring (e.g. nilradical quotient
    of a noncommutative ring)."""


class RingExprError(WncError, ValueError):
    """Surface-syntax error in a ring expression."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
