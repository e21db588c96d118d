"""Exception hierarchy shared by all modules."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(ToricError, ValueError):
    """Malformed or inconsistent input data."""


class ZeroVector(InvalidInput):
    pass


class DimMismatch(InvalidInput):
    pass


class NotABasis(InvalidInput):
    pass


class InvalidRay(InvalidInput):
    pass


class OverlappingCones(InvalidInput):
    pass


class NotPositivelySpanning(InvalidInput):
    pass


class NotComplete(InvalidInput):
    pass


class NonSimplicialCone(InvalidInput):
    pass


class NotFullDimensional(InvalidInput):
    pass


class NotAVertex(InvalidInput):
    pass


class RaysDoNotSpan(InvalidInput):
    pass


class ConeNotInFan(InvalidInput):
    pass


class InvalidWitness(InvalidInput):
    pass


class NotVeryAmple(InvalidInput):
    pass


class Inconclusive(ToricError):
    """A bounded search ran out of budget before reaching a verdict."""
