"""Exception types shared across the package."""


class VoganError(ValueError):
    """Base class for all errors raised by this package."""


class SupportMismatch(VoganError):
    """Two objects that must share a support do not."""


class MultiCosetSupport(VoganError):
    """Endpoints span more than one integer coset of half-integers."""


class SegmentOutsideSupport(VoganError):
    """A segment reaches past the exponents of a support."""


class InvalidTriangle(VoganError):
    """A rank triangle violates the rank constraints."""


class NotSimple(VoganError):
    """A simple multisegment was required."""
