"""Exception hierarchy shared by every module of the package."""


class TgrsError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(TgrsError, ValueError):
    pass


class ReducibleModulus(TgrsError, ValueError):
    pass


class UnsupportedSize(TgrsError, ValueError):
    pass


class SpecMismatch(TgrsError, ValueError):
    """Operands live in different fields."""


class DivisionByZero(TgrsError, ZeroDivisionError):
    pass


class NotPrimitive(TgrsError, ValueError):
    pass


class IndexOutOfRange(TgrsError, IndexError):
    pass


class DimensionMismatch(TgrsError, ValueError):
    pass


class InvalidDimension(TgrsError, ValueError):
    pass


class InvalidParams(TgrsError, ValueError):
    pass


class BoundaryCase(InvalidParams):
    """k = n-1: the parity-check matrix collapses to the single f-row."""


class WrongCharacteristic(InvalidParams):
    pass


class OddLength(InvalidParams):
    pass


class InvalidTarget(TgrsError, ValueError):
    pass


class TooLarge(TgrsError, ValueError):
    """An exhaustive oracle was asked to exceed its size guard."""


class InternalInconsistency(TgrsError, AssertionError):
    """An algebraic identity that must always hold failed; this indicates a bug, not bad input."""


class ParseError(TgrsError, ValueError):
    pass
