"""Exception hierarchy shared by all kpaths modules."""


class KPathError(Exception):
    """Base class for every error raised by this package."""


# sequences
class AdjacentRepeat(KPathError, ValueError):
    pass


class TooManyColors(KPathError, ValueError):
    pass


class InvalidOrder(KPathError, ValueError):
    pass


class OutOfValidatedRange(KPathError, ValueError):
    pass


class OracleTooLarge(KPathError, ValueError):
    pass


# graphs
class LengthMismatch(KPathError, ValueError):
    pass


class NotKPath(KPathError, ValueError):
    pass


# graph6
class Graph6Error(KPathError, ValueError):
    pass


class OrderTooLarge(Graph6Error):
    pass


class MalformedHeader(Graph6Error):
    pass


class BadLength(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass


class CharOutOfRange(Graph6Error):
    pass


# spectra
class AlphaOutOfRange(KPathError, ValueError):
    pass


class NoConvergence(KPathError, ArithmeticError):
    pass


# search
class BudgetExceeded(KPathError, RuntimeError):
    pass
