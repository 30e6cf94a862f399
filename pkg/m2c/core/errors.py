"""Exception hierarchy shared by every layer of m2c."""

from typing import Optional


class M2CError(Exception):
    """Base class for all m2c errors."""


class BoundaryMismatch(M2CError):
    """A composition node whose inner boundaries do not fit together."""

    def __init__(self, nodePath: str, reason: str):
        self.nodePath = nodePath
        self.reason = reason
        super().__init__(f"boundary mismatch at {nodePath}: {reason}")


class NonComposable(M2CError):
    pass


class MissingTableEntry(M2CError):
    pass


class UnknownGenerator(M2CError):
    pass


class NotInvertible(M2CError):
    pass


class UnknownLocation(M2CError):
    pass


class DomainTooLarge(M2CError):
    pass


class UnknownCondition(M2CError):
    pass


class BadIndices(M2CError):
    pass


class ConfigError(M2CError):
    pass


class ParseError(M2CError):
    """Malformed instance text. Line and column are 1-based."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, column {col})")


class ValidationError(M2CError):
    """A well-formed document whose content breaks a law or a boundary."""

    def __init__(self, path: str, reason: str, cause: Optional[Exception] = None):
        self.path = path
        self.reason = reason
        self.cause = cause
        super().__init__(f"{path}: {reason}")


# Errors the command line reports with exit code 2
INPUT_ERRORS = (ParseError, ValidationError, ConfigError, UnknownCondition, BadIndices, DomainTooLarge)
