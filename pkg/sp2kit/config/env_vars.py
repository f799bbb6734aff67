"""Environment variable lookup using the standardized naming scheme.

Configuration variables are named ``<PREFIX>__<SECTION>__<KEY>``, for example
``SP2KIT__NUMERICS__PARABOLIC_TOLERANCE`` for ``numerics.parabolic_tolerance``.
The prefix defaults to ``SP2KIT`` and can be changed with ``PREFIX``.

A few single-name variables are kept as fallbacks (``SP2KIT_TOLERANCE``,
``SP2KIT_LOG``); the structured name wins when both are set.
"""

import os

from dotenv import find_dotenv, load_dotenv

DEFAULT_PREFIX = "SP2KIT"

LEGACY_NAMES = {
    "numerics.parabolic_tolerance": "SP2KIT_TOLERANCE",
    "logging.level": "SP2KIT_LOG",
}

_dotenv_loaded = False


def ensure_dotenv():
    """Load ``.env`` from the working directory once; existing variables win."""
    global _dotenv_loaded
    if not _dotenv_loaded:
        load_dotenv(find_dotenv(usecwd=True), override=False)
        _dotenv_loaded = True


def prefix():
    return os.getenv("PREFIX") or DEFAULT_PREFIX


def config_var_name(path):
    """
    Build the environment variable name for a dotted config path.

    Args:
        path: Dotted path such as ``"numerics.parabolic_tolerance"``.

    Returns:
        The variable name, e.g. ``"SP2KIT__NUMERICS__PARABOLIC_TOLERANCE"``.
    """
    parts = [p.upper() for p in path.split(".")]
    return "__".join([prefix(), *parts])


def get_config_env_var(path):
    """Get a configuration variable by dotted path, or ``None``."""
    return os.getenv(config_var_name(path))


def get_env_var(path, override=None):
    """
    Get any variable for a dotted path.

    The structured name is tried first, then the legacy single name, then
    ``override``.

    Args:
        path: Dotted config path.
        override: Value returned when nothing is set.

    Returns:
        The raw string value, or ``override``.
    """
    ensure_dotenv()
    result = get_config_env_var(path)
    if not result and path in LEGACY_NAMES:
        result = os.getenv(LEGACY_NAMES[path])
    if not result:
        result = override
    return result
