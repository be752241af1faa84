"""Exception types shared across the pipeline."""


class DecompileError(Exception):
    """Base class for every failure the decompiler can report."""


class LexError(DecompileError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col


class ParseError(DecompileError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col


class UnknownOperator(DecompileError):
    """Raised when an equation uses a primitive with no registered rule."""

    def __init__(self, primitive: str):
        super().__init__(f"unknown Jaxpr operator '{primitive}'")
        self.primitive = primitive


class UnsupportedOperator(DecompileError):
    """A registered primitive was used with parameters (or under a dialect)
    the rule does not cover."""

    def __init__(self, primitive: str, detail: str):
        super().__init__(f"operator '{primitive}' unsupported: {detail}")
        self.primitive = primitive
