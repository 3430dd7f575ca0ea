"""Exceptions raised by elliptic_moments."""


class EllipticMomentsError(Exception):
    """Base class for every error raised by the package."""


class CapacityError(EllipticMomentsError):
    """An exhaustive computation would exceed a configured ceiling."""


class DomainError(EllipticMomentsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PositionError(DomainError):
    """A position tuple is out of range or not strictly increasing."""
