"""Exception hierarchy shared by every module of the package."""


class AbelError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(AbelError, ValueError):
    """Operands live over different coefficient fields."""


class PreconditionError(AbelError, ValueError):
    """An operation was called outside its documented domain."""


class ParseError(AbelError, ValueError):
    """Malformed expression text. ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RingMismatchError(ParseError):
    """Expression uses a symbol that does not belong to the requested ring."""


class OutOfScopeError(AbelError):
    """The equation falls in a case handled elsewhere (Riccati, Bernoulli, constant A, ...)."""


class GcdAmbiguousError(AbelError, ValueError):
    """Both trigonometric gcd inputs vanish and share unit-circle roots."""


class NotInvariantError(AbelError, ValueError):
    pass


class InternalInconsistency(AbelError):
    """An identity that must hold for every valid input failed."""


class BlowUpError(AbelError, RuntimeError):
    """Trajectory escaped before the end of the integration window."""

    def __init__(self, message, escape_time=None):
        self.escape_time = escape_time
        super().__init__(message)
