"""Exception hierarchy shared by every module."""


class TilingError(Exception):
    """Base class for all errors raised by domtile."""


class RegionError(TilingError, ValueError):
    """A region description could not be turned into a valid region."""


class EmptyRegion(RegionError):
    pass


class Disconnected(RegionError):
    pass


class BadCharacter(RegionError):
    pass


class BadAxisParity(TilingError, ValueError):
    """A diagonal axis at an odd doubled offset does not map cells to cells."""


class KOutOfRange(TilingError, ValueError):
    pass


class NotSymmetric(TilingError, ValueError):
    pass


class StripExceedsCorner(TilingError, ValueError):
    pass


class FrontierTooWide(TilingError):
    """The profile DP frontier would exceed the configured width."""


class TooLarge(TilingError):
    """Region too large for the brute-force oracle."""


class PrecisionExceeded(TilingError):
    """Floating evaluation could not certify the nearest integer."""


class HypothesisFailed(TilingError):
    """A theorem was applied to a configuration that violates its hypotheses."""
