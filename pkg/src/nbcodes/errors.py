"""Exception hierarchy shared by the library and the CLI exit codes."""


class DomainError(ValueError):
    """Input violates an operation's precondition (CLI exit code 1)."""


class ParseError(DomainError):
    """Malformed text file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(RuntimeError):
    """An enumeration or dimension budget would be exceeded (CLI exit code 2)."""


class NotFoundError(LookupError):
    """A randomized search exhausted its trials (CLI exit code 3)."""
