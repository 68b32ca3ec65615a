"""Exception types shared across the package."""


class SpaceError(ValueError):
    """Invalid space construction or an operand out of range."""


class CapacityError(SpaceError):
    """An engine capacity bound was exceeded."""


class ParseError(SpaceError):
    """Space file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
