"""Layered configuration: YAML files, ``.env`` and environment variables."""

from sp2kit.config.loader import load_config
from sp2kit.config.models import (
    CliSettings,
    LoggingSettings,
    NumericsSettings,
    OscillatorSettings,
    Settings,
)

__all__ = [
    "CliSettings",
    "LoggingSettings",
    "NumericsSettings",
    "OscillatorSettings",
    "Settings",
    "load_config",
]
