"""Exception hierarchy shared by every package module."""


class WaveClustError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidInputError(WaveClustError, ValueError):
    """Malformed data: wrong shape, out-of-range size or unreadable file."""


class InvalidConfigError(WaveClustError, ValueError):
    """A solver or run configuration that cannot be honoured."""


class NumericalFailureError(WaveClustError, ArithmeticError):
    """Non-finite iterates or a failed factorization."""
