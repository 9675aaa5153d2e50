"""Exception types raised by rootlat."""


class RootLatError(ValueError):
    """Base class for every error raised by this package."""


class NonInvertibleDenominator(RootLatError):
    pass


class DegreeTooLarge(RootLatError):
    pass


class InexactDivision(RootLatError):
    pass


class DimensionMismatch(RootLatError):
    pass


class NonPolynomialRemainder(RootLatError):
    pass


class UnsupportedFamily(RootLatError):
    pass


class IndexOutOfRange(RootLatError):
    pass


class NotAFace(RootLatError):
    pass


class BudgetExceeded(RootLatError):
    pass


class OrderExceeded(RootLatError):
    pass


class BallTooLarge(RootLatError):
    pass
