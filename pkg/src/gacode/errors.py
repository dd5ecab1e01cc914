from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for errors raised by the comb algebra."""


class WidthMismatchError(AlgebraError):
    pass


class ConfigurationError(AlgebraError):
    """An operation needs a reserved bit (complex or aux) that is not enabled."""


class BitIndexError(AlgebraError):
    pass


class NotFactorableError(AlgebraError):
    pass
