"""Exception types shared across the package."""

from __future__ import annotations


class CalcError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(CalcError):
    """Family/rank combination is not a simple type."""


class DimensionMismatch(CalcError):
    """Vectors live in ambient spaces of different dimensions."""


class NotARoot(CalcError):
    """Vector is not a root of the given root system."""


class NotInSpan(CalcError):
    """Vector does not lie in the span of the simple roots."""


class IndexOutOfRange(CalcError):
    """Simple-root index outside 1..rank."""


class NotProportional(CalcError):
    """Sum of non-compact roots is not an integer multiple of the fundamental weight."""


class CapExceeded(CalcError):
    """Coset enumeration would exceed the configured cap."""

    def __init__(self, total: int, cap: int):
        super().__init__(f"enumeration needs {total} coset representatives, cap is {cap}")
        self.total = total
        self.cap = cap


class DimensionTooSmall(CalcError):
    """The covering statements require dim X >= 2."""


class InvalidCover(CalcError):
    """Covering parameters must satisfy d >= 1 and N >= 2."""
