"""Exception hierarchy shared by the solver modules."""


class SautXuError(Exception):
    """Base class for every error raised by this package."""


class InvalidParam(SautXuError, ValueError):
    pass


class GridMismatch(SautXuError, ValueError):
    pass


class SymmetryViolation(SautXuError, ArithmeticError):
    """An inverse transform produced a non-negligible imaginary part."""


class UnknownKind(SautXuError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NonFinite(SautXuError, FloatingPointError):
    """NaN or Inf appeared in a field; ``state`` holds the last valid state."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class CflViolation(SautXuError, ValueError):
    pass


class NoConvergence(SautXuError, RuntimeError):
    pass


class InsufficientPoints(SautXuError, ValueError):
    pass


class ConfigError(SautXuError):
    pass


class ParseError(ConfigError):
    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(ConfigError):
    def __init__(self, field, reason):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason
