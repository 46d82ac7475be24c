"""Exception hierarchy shared by every tropic module."""


class TropicError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(TropicError, ValueError):
    pass


class SemifieldMismatch(TropicError, ValueError):
    pass


class InversionOfZero(TropicError, ZeroDivisionError):
    pass


class ZeroToNonpositivePower(TropicError, ZeroDivisionError):
    pass


class ConjugateOfZeroVector(TropicError, ValueError):
    pass


class NotMaxPlus(TropicError, TypeError):
    pass


class IrregularInput(TropicError, ValueError):
    pass


class ZeroVectorD(TropicError, ValueError):
    """The right-hand side is the zero vector where a nonzero one is required."""


class ZeroColumn(TropicError, ValueError):
    """A matrix column is the zero vector where nonzero columns are required."""


class InconsistentInput(TropicError, ValueError):
    """The matrix was not put into consistent form with the right-hand side."""


class SingleColumn(TropicError, ValueError):
    pass


class InfiniteResidual(TropicError, ArithmeticError):
    pass


class EnumerationCapExceeded(TropicError, RuntimeError):
    pass


class GridTooLarge(TropicError, ValueError):
    pass


class UnknownSemifield(TropicError, ValueError):
    pass


class ParseError(TropicError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
