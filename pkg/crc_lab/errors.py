"""
Exception types raised by crc_lab.

All of them derive from CrcLabError so the CLI can report a stable
error_type while still catching everything in one place.
"""


class CrcLabError(Exception):
    """Base class for all crc_lab errors."""


class DimensionMismatchError(CrcLabError, ValueError):
    """Vector/matrix shapes do not agree."""


class InvalidParameterError(CrcLabError, ValueError):
    """A construction parameter (m, family, weight bound) is out of range."""


class EnumerationGuardError(CrcLabError):
    """The requested exhaustive enumeration is too large to enumerate."""


class UnionNotLinearError(CrcLabError):
    """C ∪ C(ρ) is not a coset extension, so the union is not linear."""


class UnionNotRegularError(CrcLabError):
    """The compatibility conditions for a completely regular union fail."""


class NotAntipodalError(CrcLabError):
    """A graph operation needs an antipodal graph."""


class NonAutomorphismError(CrcLabError):
    """A permutation does not preserve the code or the graph."""


class DisconnectedGraphError(CrcLabError):
    """A graph operation needs a connected graph."""


class LabelMismatchError(CrcLabError):
    """Vertex labels do not match the expected label set."""
