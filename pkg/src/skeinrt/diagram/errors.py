class DiagramParseError(ValueError):
    """Malformed diagram text; ``position`` is a character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class DiagramValidationError(ValueError):
    """Well-formed text describing an invalid diagram."""
