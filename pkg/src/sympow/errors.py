"""Exception hierarchy.

Three families map onto the CLI exit codes: input problems (1), size
guards (2) and failed internal cross-checks (3).
"""


class SympowError(Exception):
    """Base class for every error raised by this package."""


class InputError(SympowError, ValueError):
    """Malformed or mathematically unsuitable input."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class NestedEdges(InputError):
    """Raised when one edge is contained in another.

    ``pair`` holds the two offending edges as tuples of vertex names,
    smaller edge first.
    """

    def __init__(self, inner, outer, prefix=""):
        self.pair = (tuple(inner), tuple(outer))
        super().__init__(
            f"{prefix}edge {{{','.join(inner)}}} is contained in edge {{{','.join(outer)}}}"
        )


class IsolatedVertex(InputError):
    pass


class NotUniform(InputError):
    pass


class NotRPartite(InputError):
    pass


class NotThreePartite(NotRPartite):
    pass


class TrivialHypergraph(InputError):
    pass


class BadParams(InputError):
    pass


class NoPathsOfLength(InputError):
    pass


class MixedAmbient(InputError):
    pass


class ZeroIdeal(InputError):
    pass


class TooLarge(SympowError):
    """A size guard was exceeded."""


class CrossCheckError(SympowError, AssertionError):
    """Two independent routes to the same quantity disagreed."""
