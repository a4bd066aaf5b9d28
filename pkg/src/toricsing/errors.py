"""Exception hierarchy shared by every module of the package."""


class ToricError(ValueError):
    """Base class for invalid-input errors (CLI exit code 2)."""


class ZeroVector(ToricError):
    pass


class DimensionMismatch(ToricError):
    pass


class InvalidWeight(ToricError):
    pass


class NonpositiveEpsilon(ToricError):
    pass


class IndexOutOfRange(ToricError):
    pass


class BoundTooSmall(ToricError):
    pass


class InvalidBound(ToricError):
    pass


class CorruptCheckpoint(ToricError):
    pass


class InternalConsistencyError(RuntimeError):
    """A derived fact that the code checks at runtime turned out false.

    Never raised for bad input; always a bug.
    """


class OutsideSupport(InternalConsistencyError):
    pass
