"""Exception hierarchy shared by every module."""


class SurfskewError(Exception):
    """Base class for all package errors."""


class ParameterError(SurfskewError, ValueError):
    """A family or construction parameter is out of range."""


class ParseError(SurfskewError, ValueError):
    """A text file does not follow its format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SurgeryError(SurfskewError):
    """A surgery precondition or post-condition failed."""


class ConstructionError(SurfskewError):
    """A construction produced an embedding that fails its own checks."""


class IntegrityError(SurfskewError):
    """Lower and upper bounds contradict each other."""


class NotFound(SurfskewError):
    """A bounded search gave up before finding an answer."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
