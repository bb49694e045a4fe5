"""Exception hierarchy shared by the library and the CLI."""


class QuadHoleError(Exception):
    """Base class for every error raised by this package."""


class CoordinateRangeError(QuadHoleError, ValueError):
    """A coordinate lies outside the exact-arithmetic envelope."""


class DegenerateInputError(QuadHoleError, ValueError):
    """Duplicate points or a collinear triple."""


class PreconditionError(QuadHoleError, ValueError):
    """An operation was called with arguments violating its contract."""


class ContradictionError(QuadHoleError, RuntimeError):
    """A case analysis reached a state that the underlying theorem rules out.

    This never signals a bad input; it means a predicate or a transcription
    of a construction is wrong.
    """


class ParseError(QuadHoleError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
