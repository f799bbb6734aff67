"""Error types shared by every sp2kit module.

All failures raised by the library derive from :class:`Sp2Error`. Each variant
carries the process exit code the command-line front end reports for it:

* ``1`` parse or usage problems
* ``2`` domain violations (non-unimodular input, values outside a validated range)
* ``3`` numeric overflow
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_OVERFLOW = 3


class Sp2Error(Exception):
    """Base class for all sp2kit errors."""

    exit_code = EXIT_DOMAIN

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        if not self.context:
            return self.message
        details = ", ".join(f"{key}={value!r}" for key, value in sorted(self.context.items()))
        return f"{self.message} ({details})"


class InvalidArgumentError(Sp2Error, ValueError):
    """A scalar argument is non-finite or outside its domain."""


class InvalidMatrixError(Sp2Error, ValueError):
    """A matrix is malformed or violates the unit-determinant invariant."""


class Sp2OverflowError(Sp2Error, OverflowError):
    """A result left the binary64 range."""

    exit_code = EXIT_OVERFLOW


class OutOfRangeError(Sp2Error, ValueError):
    """Parameters fall outside the range an oracle is validated for."""


class ParseError(Sp2Error):
    """Command-line or chain-file input could not be parsed."""

    exit_code = EXIT_USAGE


class ConfigError(Sp2Error):
    """Configuration files or environment variables hold invalid values."""

    exit_code = EXIT_USAGE
