"""Exception hierarchy shared by every griesmer-lab module."""


class GriesmerLabError(Exception):
    """Base class for all library errors."""


# fieldcore
class NotPrimePower(GriesmerLabError, ValueError):
    pass


class UnsupportedOrder(GriesmerLabError, ValueError):
    pass


class DivisionByZero(GriesmerLabError, ZeroDivisionError):
    pass


class FieldMismatch(GriesmerLabError, ValueError):
    pass


# codekit
class TooFewWords(GriesmerLabError, ValueError):
    pass


class BadCoordinate(GriesmerLabError, IndexError):
    pass


class EmptyResult(GriesmerLabError, ValueError):
    pass


class NotBinary(GriesmerLabError, ValueError):
    pass


class TargetTooLarge(GriesmerLabError, ValueError):
    pass


class NotSystematic(GriesmerLabError, ValueError):
    pass


class LengthMismatch(GriesmerLabError, ValueError):
    pass


class SizeNotPowerOfQ(GriesmerLabError, ValueError):
    pass


class TooLarge(GriesmerLabError, ValueError):
    pass


class CodeFileError(GriesmerLabError, ValueError):
    """Raised by the text parsers; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


# boundtab
class Inapplicable(GriesmerLabError, ValueError):
    pass


class OddDistance(GriesmerLabError, ValueError):
    pass


# buildkit
class OutOfRange(GriesmerLabError, ValueError):
    pass


class BadPrime(GriesmerLabError, ValueError):
    pass


class UnknownOrder(GriesmerLabError, ValueError):
    pass


class SizeTooLarge(GriesmerLabError, ValueError):
    pass


# optsearch
class BudgetExceeded(GriesmerLabError):
    """Search ran out of nodes or wall-clock time; ``best`` is the largest partial code seen."""

    def __init__(self, message: str, best=None, nodes: int = 0):
        self.best = best
        self.nodes = nodes
        super().__init__(message)
