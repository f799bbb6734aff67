import logging
import os

import pytest

_ENV_NAMES = ("PREFIX", "RUN_ENV", "SP2KIT_CONFIG_DIR", "SP2KIT_LOG", "SP2KIT_TOLERANCE")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Strip every sp2kit variable so the host environment cannot leak into a test."""
    for name in list(os.environ):
        if name in _ENV_NAMES or name.startswith("SP2KIT__"):
            monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture(autouse=True)
def reset_sp2kit_logger():
    """Undo ``init_logging`` so caplog sees records again."""
    yield
    logger = logging.getLogger("sp2kit")
    for handler in list(logger.handlers):
        if getattr(handler, "_sp2kit_handler", False):
            logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def config_dir(tmp_path):
    """An empty config directory; tests drop YAML files into it."""
    directory = tmp_path / "config"
    directory.mkdir()
    return directory
