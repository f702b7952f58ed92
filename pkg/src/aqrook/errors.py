"""Exception hierarchy shared by every aqrook module."""


class AqrookError(Exception):
    """Base class for all library errors."""


class DivisionByZero(AqrookError, ZeroDivisionError):
    pass


class EvalPole(AqrookError, ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""


class DivergentLimit(AqrookError, ArithmeticError):
    pass


class OddBExponent(AqrookError, ValueError):
    """``a -> a q^e`` needs every power of ``b = sqrt(a)`` to be even."""


class ParseError(AqrookError, ValueError):
    pass


class BoardError(AqrookError, ValueError):
    pass


class NotNondecreasing(BoardError):
    pass


class NegativeHeight(BoardError):
    pass


class InvalidShiftedBoard(BoardError):
    pass


class NotFerrersAfterAppend(BoardError):
    pass


class InvalidFamilyParams(AqrookError, ValueError):
    pass


class DegenerateParameters(AqrookError, ValueError):
    pass
