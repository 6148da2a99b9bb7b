"""Execution-time failures. Parse-time problems live in script.errors."""


class ExecutionError(ValueError):
    """Base class; carries the failing step's index and name when there is one."""

    def __init__(self, message: str, *, step_index: int | None = None, step_name: str | None = None):
        self.step_index = step_index
        self.step_name = step_name
        if step_index is not None:
            message = f"step {step_index} ({step_name}): {message}"
        super().__init__(message)


class StepFailed(ExecutionError):
    """A geometry primitive rejected its inputs; `cause` is the GeometryError."""

    def __init__(self, cause: Exception, *, step_index: int, step_name: str):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}", step_index=step_index, step_name=step_name)


class AmbiguousPick(ExecutionError):
    pass


class DegenerateConstruction(ExecutionError):
    pass


class UnboundParameter(ExecutionError):
    pass


class UnknownName(ExecutionError):
    pass


class NotAPoint(ExecutionError):
    pass
