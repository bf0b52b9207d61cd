"""Errors raised by the algebra modules.

Mathematical outcomes such as an infeasible witness system are not errors;
they come back as values (see ``two_local.Failure``).
"""


class AlgebraError(Exception):
    """Base class for every error raised by the algebras app."""


class AlgebraMismatch(AlgebraError):
    """Two operands (or an operand and a map) live in different algebras."""


class InvalidSymbol(AlgebraError):
    """A basis symbol that does not exist, e.g. e[0] or I[3] in the thin algebra."""


class ElementParseError(AlgebraError):
    """Malformed element literal; ``position`` is the 0-based column of the problem."""

    def __init__(self, message, text='', position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class LiteralError(AlgebraError):
    """A derivation, map or table literal that cannot be interpreted."""


class WindowOverflow(AlgebraError):
    """A probe leaves the index window a windowed derivation is defined on."""


class WindowTooSmall(AlgebraError):
    """The requested window cannot hold the supports an operation needs."""


class UnknownProbe(AlgebraError):
    """A value-table oracle was queried at an element it has no entry for."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"no table entry for {element}")
