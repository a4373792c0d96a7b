class InvalidVertexError(ValueError):
    pass


class InvalidSubsetError(ValueError):
    pass


class InvalidPairError(ValueError):
    pass


class InvalidSpecError(ValueError):
    """Raised for generator parameters that violate a family's divisibility
    or range constraints."""


class CapabilityExceeded(RuntimeError):
    """An exact routine was asked to run beyond its configured size guard."""


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
