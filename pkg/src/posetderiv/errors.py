"""Exception types shared across the package."""


class PosetderivError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PosetderivError):
    """Malformed external input (files, CLI arguments, JSON payloads)."""


class DuplicateError(PosetderivError):
    """Duplicate element identifier or duplicate cover pair."""


class UnknownElementError(PosetderivError):
    """Reference to an element that is not part of the poset."""


class CycleError(PosetderivError):
    """The cover relation contains a directed cycle (or a self-pair)."""


class NotReducedError(PosetderivError):
    """A cover pair is implied by a longer chain; input must be reduced."""


class UnsupportedRingError(PosetderivError):
    """The requested ring does not support the operation."""


class DimensionError(PosetderivError):
    """Boundary dimension outside the range built for the complex."""


class PathLimitExceeded(PosetderivError):
    """Too many distinct monotone cover paths between one pair of elements."""

    def __init__(self, source, target, limit):
        super().__init__(
            f"more than {limit} cover paths from {source!r} to {target!r}"
        )
        self.source = source
        self.target = target
        self.limit = limit


class NotComparableError(PosetderivError):
    """Consecutive walk elements are equal or incomparable."""


class SizeLimitError(PosetderivError):
    """Requested enumeration size is outside the supported range."""


class UnknownFixtureError(PosetderivError):
    """No built-in fixture with the requested name."""
