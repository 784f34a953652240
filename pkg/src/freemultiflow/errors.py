"""Exception hierarchy shared by all modules."""


class MultiflowError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(MultiflowError):
    """Input network or flow violates a documented precondition."""


class FormatError(MultiflowError):
    """Malformed network or solution file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedError(MultiflowError):
    """Requested an operation outside the supported problem class."""


class InternalInvariantError(MultiflowError):
    """A solver invariant failed; indicates a bug, not bad input.

    Carries a diagnostic payload (`dump`) describing the state at the point
    of failure so the instance can be reproduced.
    """

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump
