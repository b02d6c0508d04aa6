"""Exception types raised by the library."""

from __future__ import annotations


class LatticeError(ValueError):
    """Base class for malformed lattice input."""


class DimensionMismatchError(LatticeError):
    """A class has the wrong number of multiplicities for its surface."""


class ClassParseError(LatticeError):
    """Class text could not be parsed.

    ``token`` holds the offending piece of input (possibly the empty string).
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class UnsupportedRangeError(LatticeError):
    """The number of blown-up points is outside the supported range."""


class InconsistentClassError(ArithmeticError):
    """An integrality identity failed; indicates a bug, never bad input."""


class NotSmoothRationalError(LatticeError):
    """A dimension formula was requested for a class without a smooth rational curve."""


class OrbitOverflowError(RuntimeError):
    """Orbit enumeration exceeded its size cap."""

    def __init__(self, cap: int, partial_count: int):
        super().__init__(f"orbit exceeds cap {cap} (at least {partial_count} elements seen)")
        self.cap = cap
        self.partial_count = partial_count
