"""Exception hierarchy shared by every module of the package."""


class EdgeElimError(Exception):
    """Base class for all package errors."""


# polynomial arithmetic


class ArithmeticCapacityError(EdgeElimError, OverflowError):
    """An exponent left the signed 32-bit range."""


class NegativePowerOfNonMonomial(EdgeElimError, ValueError):
    pass


class ZeroPolynomial(EdgeElimError, ValueError):
    pass


class PolynomialParseError(EdgeElimError, ValueError):
    pass


# graphs


class InvalidEdgeRef(EdgeElimError, IndexError):
    pass


class UnknownVertex(EdgeElimError, KeyError):
    pass


class EmptyGraph(EdgeElimError, ValueError):
    pass


class ParseError(EdgeElimError, ValueError):
    """Malformed graph input. ``line`` and ``pos`` are 1-based when known."""

    def __init__(self, message, line=None, pos=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"byte {pos}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.pos = pos


# computation


class SizeGuardExceeded(EdgeElimError):
    pass


class EnumerationGuardExceeded(EdgeElimError):
    pass


class InvalidPalette(EdgeElimError, ValueError):
    pass


class NonPolynomialResult(EdgeElimError, ArithmeticError):
    """A transform produced a Laurent term with a negative exponent."""


class MalformedQ(EdgeElimError, ValueError):
    pass


class MalformedInput(EdgeElimError, ValueError):
    pass


class NonIntegralDivision(EdgeElimError, ArithmeticError):
    pass
