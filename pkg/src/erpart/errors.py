"""Exception types raised by erpart."""


class ErpartError(Exception):
    """Base class for all erpart errors."""


class OracleSizeExceeded(ErpartError):
    """The brute-force cover oracle would exceed its configured size bound."""


class NotErPartition(ErpartError, ValueError):
    """A partition fails the prefix inequalities where they are required."""


class NonpositivePart(ErpartError, ValueError):
    """Reconstructing a partition from a mu-vector produced a part <= 0."""


class OrderExceeded(ErpartError, IndexError):
    """A coefficient was requested at or beyond a series' truncation order."""


class UnsupportedLevel(ErpartError, ValueError):
    """A closed form was asked for at a level where it does not apply."""


class LimitExceeded(ErpartError):
    """Enumeration hit its result cap.

    The partial result is kept on ``partial`` so callers can still inspect it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []
