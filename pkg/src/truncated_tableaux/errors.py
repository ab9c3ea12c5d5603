"""Exception types shared across the package."""


class TableauxError(Exception):
    """Base class for all errors raised by this package."""


class NotWeaklyDecreasing(TableauxError, ValueError):
    pass


class TruncationTooLarge(TableauxError, ValueError):
    pass


class ShiftedNeedsDistinctParts(TableauxError, ValueError):
    pass


class ValuationMismatch(TableauxError, ArithmeticError):
    pass


class NonIntegerResult(TableauxError, ArithmeticError):
    pass


class TooLarge(TableauxError):
    pass


class ShapeMismatch(TableauxError, ValueError):
    pass


class RequiresNLeqM(TableauxError, ValueError):
    pass


class EntryOutOfRange(TableauxError, ValueError):
    pass


class LengthRestriction(TableauxError, ValueError):
    pass


class InnerNotContained(TableauxError, ValueError):
    pass


class NonconvergentSpec(TableauxError, ValueError):
    pass


class SingularDenominator(TableauxError, ZeroDivisionError):
    pass


class DomainError(TableauxError, ValueError):
    pass


class UnsupportedFamily(TableauxError):
    pass


class ParseError(TableauxError, ValueError):
    pass


class UnknownSuite(TableauxError, LookupError):
    pass
