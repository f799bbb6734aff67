"""Shared errors and logging setup."""

from sp2kit.common.error import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_OVERFLOW,
    EXIT_USAGE,
    ConfigError,
    InvalidArgumentError,
    InvalidMatrixError,
    OutOfRangeError,
    ParseError,
    Sp2Error,
    Sp2OverflowError,
)
from sp2kit.common.log_setup import init_logging, parse_level

__all__ = [
    "EXIT_DOMAIN",
    "EXIT_OK",
    "EXIT_OVERFLOW",
    "EXIT_USAGE",
    "ConfigError",
    "InvalidArgumentError",
    "InvalidMatrixError",
    "OutOfRangeError",
    "ParseError",
    "Sp2Error",
    "Sp2OverflowError",
    "init_logging",
    "parse_level",
]
