"""Exception types shared across the package."""


class SchulzeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SchulzeError):
    """Input rejected: malformed data or an unmet precondition."""


class ParseError(ValidationError):
    """Election file rejected; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class CapacityError(SchulzeError):
    """Instance exceeds a hard size bound of an exhaustive operation."""


class InternalInvariantError(SchulzeError):
    """A guaranteed-by-proof condition failed; indicates an implementation bug."""
