"""Exception types shared across the package."""


class SegueError(Exception):
    """Base class for all errors raised by this package."""


class DocumentError(SegueError, ValueError):
    """A dataset document is malformed, inconsistent, or violates an invariant."""


class ProfileError(SegueError, ValueError):
    """A synthetic-generator profile is invalid."""


class UnknownIdError(SegueError, KeyError):
    """A node, ego, attribute, session, or event-type id does not exist."""

    def __str__(self):  # KeyError quotes its message; keep it readable
        return self.args[0] if self.args else ""


class TimeRangeError(SegueError, IndexError):
    """A time index lies outside [0, num_time_steps)."""


class SpecificationError(SegueError, ValueError):
    """An event-type specification is invalid or applied to the wrong series/kind."""


class ConsistencyError(SegueError, ValueError):
    """Cross-object references disagree (e.g. an event of an unknown type)."""


class DimensionError(SegueError, ValueError):
    """Vector lengths disagree."""


class MatrixError(SegueError, ValueError):
    """A distance matrix is not symmetric or has an invalid diagonal."""


class ParameterError(SegueError, ValueError):
    """A numeric parameter is out of its allowed range."""
