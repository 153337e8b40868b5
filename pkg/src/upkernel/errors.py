"""Exception hierarchy."""


class UpKernelError(Exception):
    """Base class for every error raised by this package."""


class GraphError(UpKernelError, ValueError):
    """A digraph violates a structural invariant (unknown vertex, loop, ...)."""


class InvalidSetError(UpKernelError, ValueError):
    pass


class OracleLimitError(UpKernelError):

    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(
            f"digraph has {n} vertices, above the oracle limit of {limit}")


class ShapeError(UpKernelError, ValueError):
    """Input is outside the family a decider was written for."""


class InconsistencyError(UpKernelError):
    """A decider's condition held but its witness failed the kernel check."""


class RecipeError(UpKernelError, ValueError):
    pass


class DocumentError(UpKernelError, ValueError):

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
