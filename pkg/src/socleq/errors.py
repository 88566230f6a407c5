"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all errors raised deliberately by this package."""


class InputError(EngineError):
    """Malformed user input (bad ring file, bad flag value, non-prime modulus...)."""


class FieldMismatchError(EngineError):
    """Two operands live over different coefficient fields."""


class RingMismatchError(EngineError):
    """Two operands live in different ambient polynomial rings."""


class ParseError(InputError):
    """Syntax error in a polynomial or ring file.

    Carries the offset (0-based) and a human-readable position so callers can
    point at the offending character.
    """

    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.pos = pos
        self.line = line
        self.column = col


class BudgetExceededError(EngineError):
    """A step or truncation budget ran out before the computation settled."""


class UndecidableError(EngineError):
    """The requested local decision is outside the engine's decidable class."""
