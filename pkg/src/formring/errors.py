"""Exception types shared across the package."""


class FormringError(Exception):
    """Base class for all package errors."""


class AmbientMismatchError(FormringError):
    """Operands live in different ambient rings."""


class NotHomogeneousError(FormringError):
    """A homogeneous polynomial or ideal was required."""


class ZeroRingError(FormringError):
    """The quotient ring is zero (the ideal contains 1)."""


class NotInIrrelevantError(FormringError):
    """The ideal must be contained in the irrelevant maximal ideal."""


class SaturationLimitError(FormringError):
    """Iterated ideal quotients did not stabilize within the cap."""

    def __init__(self, cap: int):
        super().__init__(f"saturation did not stabilize within {cap} quotient steps")
        self.cap = cap


class StabilizationError(FormringError):
    """A colimit or difference table did not stabilize within its window."""


class ParseError(FormringError):
    """Malformed session or polynomial text."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col
