"""Exception types raised across the package."""


class ExpDqError(Exception):
    """Base class for all package errors."""


class NotDivisible(ExpDqError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class MalformedGraph6(ExpDqError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadQLiteral(ExpDqError, ValueError):
    pass


class InvalidParameter(ExpDqError, ValueError):
    pass


class NotRegular(ExpDqError, ValueError):
    pass


class DiameterExceeded(ExpDqError, ValueError):
    pass


class NonIntegerRoot(ExpDqError, ValueError):
    pass


class OddPowerPresent(ExpDqError, ValueError):
    pass


class StructureMismatch(ExpDqError, ValueError):
    pass


class ConditionViolated(ExpDqError, ValueError):
    pass


class ConstructionError(ExpDqError, AssertionError):
    """A construction whose hypotheses verified produced a non-cospectral pair."""
