"""Exception hierarchy shared by every module of the package."""


class TilingError(Exception):
    """Base class for all errors raised by ferrers_tilings."""


class ShapeError(TilingError, ValueError):
    pass


class EmptyShape(ShapeError):
    pass


class NotWeaklyDecreasing(ShapeError):
    pass


class NonPositivePart(ShapeError):
    pass


class SingleColumnUnsupported(ShapeError):
    pass


class InvalidParams(TilingError, ValueError):
    pass


class DegreeTooHigh(TilingError, ValueError):
    pass


class BothZero(TilingError, ValueError):
    pass


class ZeroPolynomial(TilingError, ValueError):
    pass


class InexactDivision(TilingError, ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class EnumerationCapExceeded(TilingError):
    pass


class NotAHook(TilingError, ValueError):
    pass


class NotRigid(TilingError, ValueError):
    pass


class NotRealRooted(TilingError, ValueError):
    pass


class NegativeCoefficients(TilingError, ValueError):
    pass


class TilingInterpretationInvalid(TilingError, ValueError):
    pass


class GraphTooLarge(TilingError):
    pass


class NeedsAtLeastThreeColumns(TilingError, ValueError):
    pass
