"""Exception hierarchy shared by every module."""


class CarlitzLabError(Exception):
    """Base class for all errors raised by carlitz_lab."""


class DomainError(CarlitzLabError, ArithmeticError):
    """Mathematically undefined operation, e.g. inverting zero."""


class SingularityError(DomainError):
    """Repeated nodes where pairwise-distinct ones are required."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class UsageError(CarlitzLabError, ValueError):
    """Arguments violate an operation's preconditions."""


class UnsupportedExponentError(UsageError):
    """No closed form is available for the requested exponent."""


class ParseError(UsageError):
    """A polynomial literal could not be parsed."""

    def __init__(self, message, column):
        super().__init__(f"{message} (column {column})")
        self.column = column


class ResourceError(CarlitzLabError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, message, cap=None, completed=None):
        super().__init__(message)
        self.cap = cap
        self.completed = completed


class ConsistencyError(CarlitzLabError):
    """An internal cross-check failed; indicates an arithmetic bug."""
