"""Exception hierarchy shared by every module."""


class PosalgError(ValueError):
    """Base class for all input/domain failures raised by the package."""


class ShapeError(PosalgError):
    """Operands have incompatible or non-square shapes."""


class DomainError(PosalgError):
    """An input violates a mathematical precondition (sign, idempotency, order)."""


class ParseError(PosalgError):
    """A matrix or word could not be parsed."""
