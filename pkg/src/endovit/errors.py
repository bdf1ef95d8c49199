"""Exception types shared across the package."""


class EndovitError(Exception):
    """Base class for all package errors."""


class ShapeError(EndovitError, ValueError):
    """Operand shapes are inconsistent with an operation's contract."""


class DomainError(EndovitError, ValueError):
    """An input value lies outside an operation's mathematical domain."""


class NumericError(EndovitError, ArithmeticError):
    """A computation produced or encountered non-finite values."""


class UsageError(EndovitError, RuntimeError):
    """An API was called in a way its contract forbids."""


class ConfigError(EndovitError, ValueError):
    """A configuration value or combination is invalid."""


class SpecError(ConfigError):
    """A dataset-generation spec is internally infeasible."""


class LoadError(EndovitError, ValueError):
    """A persisted artifact failed validation on load."""
