"""Exception types shared across the package."""


class UsageError(ValueError):
    """Invalid arguments or inputs outside an operation's domain."""


class ResourceError(RuntimeError):
    """A configured size cap was exceeded.

    ``partial`` holds whatever results were complete before the cap was hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []


class NumericError(ArithmeticError):
    """An iterative numerical method failed to converge or lost precision."""


class PrecisionRangeError(NumericError):
    """Requested index lies outside the range where a float evaluation is trustworthy."""
