"""Exceptions raised by bellkit."""


class BellkitError(Exception):
    """Base class of all bellkit errors."""


class DomainError(BellkitError, ValueError):
    """Argument lies outside the domain of an operation."""


class DriverError(BellkitError):
    """Unknown driver or malformed driver parameters."""


class DriverFileError(DriverError):
    """Sequence file could not be read or parsed.

    Attributes:
        path (str): path of the offending file
        line (int): 1-based line number of the failure, ``None`` if unknown
    """

    def __init__(self, path, message, line=None):
        self.path = str(path)
        self.line = line
        location = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{location}: {message}")


class PIntegralityError(DomainError):
    """Value with denominator divisible by p was reduced modulo p.

    Attributes:
        index (int): sequence index of the offending value
        p (int): the modulus
    """

    def __init__(self, index, p, value):
        self.index = index
        self.p = p
        super().__init__(f"value {value} at index {index} is not {p}-integral")


class PathMismatchError(BellkitError):
    """Independent coefficient paths disagree (an implementation bug)."""

    def __init__(self, index, values):
        self.index = index
        self.values = values
        rendered = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"coefficient paths disagree at n={index}: {rendered}")


class ConfigurationError(BellkitError):
    """Invalid environment configuration."""
