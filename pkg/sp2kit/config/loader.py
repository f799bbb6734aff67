"""Layered configuration loading.

Order, later layers winning:

1. dataclass defaults in :mod:`sp2kit.config.models`
2. ``<config_dir>/default.yml``
3. ``<config_dir>/<RUN_ENV>.yml`` (skipped when ``RUN_ENV`` is unset or ``default``)
4. environment variables (see :mod:`sp2kit.config.env_vars`)
"""

import logging
import os
from dataclasses import replace
from pathlib import Path

import yaml

from sp2kit.common.error import ConfigError
from sp2kit.config import env_vars
from sp2kit.config.models import SECTIONS, Settings, section_keys

logger = logging.getLogger(__name__)

CONFIG_DIR_ENV = "SP2KIT_CONFIG_DIR"
RUN_ENV = "RUN_ENV"


def config_dir():
    return Path(os.getenv(CONFIG_DIR_ENV) or "config")


def _read_yaml(path):
    if not path.is_file():
        logger.debug("config file %s not found, skipping", path)
        return {}
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except yaml.YAMLError as exc:
        raise ConfigError("config file is not valid YAML", path=str(path), reason=str(exc)) from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a mapping", path=str(path))
    logger.debug("loaded config file %s", path)
    return data


def _coerce(section, key, raw, expected):
    try:
        if expected in (int, "int"):
            return int(raw)
        if expected in (float, "float"):
            return float(raw)
        return str(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError("config value has the wrong type",
                          key=f"{section}.{key}", value=raw) from exc


def _merge(settings, layer, origin):
    for section, values in layer.items():
        if section not in SECTIONS:
            raise ConfigError("unknown config section", section=section, origin=origin)
        if not isinstance(values, dict):
            raise ConfigError("config section must be a mapping", section=section, origin=origin)
        keys = section_keys(section)
        updates = {}
        for key, raw in values.items():
            if key not in keys:
                raise ConfigError("unknown config key", key=f"{section}.{key}", origin=origin)
            updates[key] = _coerce(section, key, raw, keys[key])
        settings = replace(settings, **{section: replace(getattr(settings, section), **updates)})
    return settings


def _env_layer():
    layer = {}
    for section in SECTIONS:
        for key in section_keys(section):
            raw = env_vars.get_env_var(f"{section}.{key}")
            if raw is not None:
                layer.setdefault(section, {})[key] = raw
    return layer


def load_config(directory=None, run_env=None):
    """
    Load settings from files and environment.

    Args:
        directory: Config directory; defaults to ``SP2KIT_CONFIG_DIR`` or ``./config``.
        run_env: Overlay name; defaults to the ``RUN_ENV`` variable.

    Returns:
        Validated :class:`Settings`.

    Raises:
        ConfigError: If a file or variable holds an invalid value.
    """
    env_vars.ensure_dotenv()
    base = Path(directory) if directory is not None else config_dir()
    run_env = run_env if run_env is not None else os.getenv(RUN_ENV, "default")

    settings = Settings()
    settings = _merge(settings, _read_yaml(base / "default.yml"), "default.yml")
    if run_env and run_env != "default":
        settings = _merge(settings, _read_yaml(base / f"{run_env}.yml"), f"{run_env}.yml")
    settings = _merge(settings, _env_layer(), "environment")
    return settings.validate()
