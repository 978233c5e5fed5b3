"""Exception hierarchy shared by all modules."""


class BoomerangError(Exception):
    """Base class; ``witness`` carries whatever evidence explains the failure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotProperlyColored(BoomerangError):
    pass


class Disconnected(BoomerangError):
    pass


class NotRainbowBoomerang(BoomerangError):
    pass


class SizeLimitExceeded(BoomerangError):
    pass


class PreconditionViolated(BoomerangError):
    pass


class BudgetExceeded(BoomerangError):
    """Groupoid generation hit its word-length or morphism budget (infinite groupoid suspected)."""


class InvalidCartanGraph(BoomerangError):
    pass


class NotPathSimplyConnected(BoomerangError):
    pass


class InconsistentQuiddity(BoomerangError):
    pass


class NotFinite(BoomerangError):
    pass


class IsomorphismFailed(BoomerangError):
    pass


class DivisionByNonUnit(BoomerangError, ZeroDivisionError):
    pass


class NotArithmetic(BoomerangError):
    """No finite Cartan entry exists: the Nichols algebra is infinite-dimensional."""


class OrderOne(BoomerangError):
    pass


class ParseError(BoomerangError):
    """Malformed input; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where, (line, column))
        self.line = line
        self.column = column
