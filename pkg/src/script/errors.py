"""Diagnostics raised while parsing a .gcs construction script."""


class ScriptError(ValueError):
    """A single parse diagnostic with its source position and offending token."""

    def __init__(self, message: str, *, source: str = "<script>", line: int = 0, column: int = 0, token: str = ""):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        self.token = token
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f"{self.source}:{self.line}:{self.column}"
        if self.token:
            return f"{where}: {self.message} (at {self.token!r})"
        return f"{where}: {self.message}"


class ScriptSyntaxError(ScriptError):
    pass


class UndefinedIdentifier(ScriptError):
    pass


class ArityError(ScriptError):
    pass


class MissingPick(ScriptError):
    pass


class UnexpectedPick(ScriptError):
    pass


class KindMismatch(ScriptError):
    pass


class DuplicateName(ScriptError):
    pass


class OptionalDependency(ScriptError):
    pass
