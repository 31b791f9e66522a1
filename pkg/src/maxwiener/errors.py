"""Exception types raised across the package."""


class MaxWienerError(Exception):
    """Base class for all package errors."""


class NotTreeGraphic(MaxWienerError, ValueError):
    """Degree list cannot be the degree sequence of a tree."""


class TooSmall(MaxWienerError, ValueError):
    """Degree list describes fewer than two vertices."""


class InvalidTree(MaxWienerError, ValueError):
    """Edge list is not a tree on vertices 0..n-1."""


class WienerOverflow(MaxWienerError, OverflowError):
    """An exact result left the signed 64-bit range."""


class InstanceTooLarge(MaxWienerError, ValueError):
    """Instance exceeds the configured size cap of an exhaustive method."""


class UnsupportedK(MaxWienerError, ValueError):
    """Method is only defined for a narrower range of internal-vertex counts."""


class NoConvergence(MaxWienerError, RuntimeError):
    """Iterative method hit its iteration limit."""
