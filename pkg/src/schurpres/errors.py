"""Exception types shared across the package."""


class SchurError(Exception):
    pass


class DimensionMismatch(SchurError):
    pass


class NotInSpan(SchurError):
    pass


class InexactDivision(SchurError, ArithmeticError):
    pass


class ConventionFailure(SchurError):
    pass


class NoRule(SchurError):
    pass


class NonTermination(SchurError):
    pass


class IntegralityFailure(SchurError):
    pass


class BoundExceeded(SchurError):
    pass
