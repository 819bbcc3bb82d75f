"""Exception taxonomy shared across the library."""


class NotRotaBaxterError(ValueError):
    """A supplied operator fails the Rota-Baxter identity."""


class NotInnerError(ValueError):
    """A post-structure has left multiplications outside the inner ones."""


class NontrivialObstructionError(ValueError):
    """The obstruction class is nonzero; no Rota-Baxter operator induces the structure."""


class ParseError(ValueError):
    """Rejected input document; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
