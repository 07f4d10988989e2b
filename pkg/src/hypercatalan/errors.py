"""Exception types raised across the package."""


class HyperCatalanError(Exception):
    """Base class for all package errors."""


class InvalidTypeVector(HyperCatalanError, ValueError):
    pass


class BaseMismatch(HyperCatalanError, ValueError):
    """Two type vectors or series with different index bases were combined."""


class UnboundedEnumeration(HyperCatalanError, ValueError):
    pass


class InvalidMultinomial(HyperCatalanError, ValueError):
    pass


class Unsupported(HyperCatalanError, ValueError):
    pass


class OutOfTruncation(HyperCatalanError, KeyError):
    """A coefficient was requested outside the truncation bounds of a series."""

    def __str__(self):
        return Exception.__str__(self)


class NotDivisible(HyperCatalanError, ArithmeticError):
    pass


class PivotZero(HyperCatalanError, ZeroDivisionError):
    """The linear coefficient of a polynomial vanishes, so the series root is undefined."""
