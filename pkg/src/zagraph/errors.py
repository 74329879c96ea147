class ZAGraphError(Exception):
    """Base class for all errors raised by zagraph."""


class InvalidOrderError(ZAGraphError, ValueError):
    pass


class InvalidCharacteristicError(ZAGraphError, ValueError):
    pass


class NonMonicModulusError(ZAGraphError, ValueError):
    pass


class EmptyProductError(ZAGraphError, ValueError):
    pass


class InvalidQuotientError(ZAGraphError, ValueError):
    pass


class CapacityError(ZAGraphError):
    """A ring, table or ideal lattice would exceed a configured size cap."""


class BudgetExceeded(ZAGraphError):
    """An exact search ran out of its time budget before proving optimality."""


class ExprError(ZAGraphError, ValueError):
    """Problem with a ring expression; ``offset`` is a byte offset into the text."""

    kind = "error"

    def __init__(self, message, offset=None, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = message
        if offset is not None:
            detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class ExprSyntaxError(ExprError):
    kind = "syntax-error"


class ExprSemanticError(ExprError):
    kind = "semantic-error"
