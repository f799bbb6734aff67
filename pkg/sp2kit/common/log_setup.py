"""Logging setup for the sp2kit logger tree.

Levels follow the familiar ``error`` / ``warn`` / ``info`` / ``debug`` / ``trace``
names; ``trace`` maps onto ``DEBUG`` since the standard library has no finer level.
"""

import logging
import os

LOG_ENV_VAR = "SP2KIT_LOG"

_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "warning": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
    "trace": logging.DEBUG,
}

_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def parse_level(name):
    """
    Translate a level name into a ``logging`` level.

    Args:
        name: Level name, case-insensitive.

    Returns:
        The numeric logging level.

    Raises:
        ValueError: If the name is unknown.
    """
    try:
        return _LEVELS[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown log level {name!r}; expected one of {sorted(_LEVELS)}") from None


def init_logging(level=None, stream=None):
    """
    Install a single stderr handler on the ``sp2kit`` logger.

    The level is taken from ``level`` if given, otherwise from ``SP2KIT_LOG``,
    otherwise ``warning``. Calling this twice replaces the handler instead of
    stacking a second one.

    Args:
        level: Optional level name.
        stream: Optional stream for the handler (defaults to stderr).

    Returns:
        The configured ``sp2kit`` logger.
    """
    name = level or os.getenv(LOG_ENV_VAR) or "warning"
    logger = logging.getLogger("sp2kit")
    logger.setLevel(parse_level(name))

    for handler in list(logger.handlers):
        if getattr(handler, "_sp2kit_handler", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._sp2kit_handler = True
    logger.addHandler(handler)
    logger.propagate = False
    return logger
