"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An object or input violates its structural invariants."""


class ParseError(ValidationError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructureError(ValidationError):
    """An internal construction produced something that is not a tree / star."""


class RefinementError(ValueError):
    """sigma does not refine phi(T)."""


class PreconditionError(ValueError):
    pass


class SameBlockError(PreconditionError):
    """i and i+1 share a block of phi(T)."""


class GroundSetMismatch(ValueError):
    pass


class OrderError(ValueError):
    """The two partitions are not comparable in the required direction."""


class BoundError(ValueError):
    """Requested n exceeds the exhaustive-enumeration bound."""
