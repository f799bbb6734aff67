from pathlib import Path

import pytest

from sp2kit.common import ConfigError
from sp2kit.config import Settings, load_config
from sp2kit.config.env_vars import config_var_name, get_env_var


def write(directory, name, text):
    (directory / name).write_text(text, encoding="utf-8")


def test_defaults_without_files(config_dir):
    settings = load_config(config_dir)
    assert settings == Settings()
    assert settings.numerics.parabolic_tolerance == 1e-9
    assert settings.numerics.renormalize_interval == 32
    assert settings.oscillator.quadrature_nodes == 64
    assert settings.cli.det_tolerance == 1e-8
    assert settings.logging.level == "warning"


def test_repository_default_file_matches_models():
    assert load_config(Path(__file__).parent.parent / "config") == Settings()


def test_run_env_overlay_wins_over_default(config_dir):
    write(config_dir, "default.yml", "numerics:\n  conditioning_band: 1.0e-5\ncli:\n  workers: 2\n")
    write(config_dir, "ci.yml", "cli:\n  workers: 3\n")

    settings = load_config(config_dir, run_env="ci")
    assert settings.numerics.conditioning_band == 1e-5
    assert settings.cli.workers == 3


def test_run_env_from_environment(config_dir, monkeypatch):
    write(config_dir, "ci.yml", "oscillator:\n  max_index: 8\n")
    monkeypatch.setenv("RUN_ENV", "ci")
    assert load_config(config_dir).oscillator.max_index == 8


def test_config_dir_from_environment(config_dir, monkeypatch):
    write(config_dir, "default.yml", "logging:\n  level: debug\n")
    monkeypatch.setenv("SP2KIT_CONFIG_DIR", str(config_dir))
    assert load_config().logging.level == "debug"


def test_structured_env_var_wins_over_files(config_dir, monkeypatch):
    write(config_dir, "default.yml", "numerics:\n  parabolic_tolerance: 1.0e-7\n")
    monkeypatch.setenv("SP2KIT__NUMERICS__PARABOLIC_TOLERANCE", "1e-8")
    assert load_config(config_dir).numerics.parabolic_tolerance == 1e-8


def test_legacy_tolerance_variable(config_dir, monkeypatch):
    monkeypatch.setenv("SP2KIT_TOLERANCE", "1e-6")
    assert load_config(config_dir).numerics.parabolic_tolerance == 1e-6

    monkeypatch.setenv("SP2KIT__NUMERICS__PARABOLIC_TOLERANCE", "1e-5")
    assert load_config(config_dir).numerics.parabolic_tolerance == 1e-5


def test_prefix_override(config_dir, monkeypatch):
    monkeypatch.setenv("PREFIX", "ABCD")
    monkeypatch.setenv("ABCD__CLI__WORKERS", "4")
    assert config_var_name("cli.workers") == "ABCD__CLI__WORKERS"
    assert load_config(config_dir).cli.workers == 4


def test_get_env_var_falls_back_to_override():
    assert get_env_var("cli.workers", override="7") == "7"
    assert config_var_name("cli.det_tolerance") == "SP2KIT__CLI__DET_TOLERANCE"


@pytest.mark.parametrize("text, match", [
    ("solver:\n  steps: 3\n", "unknown config section"),
    ("numerics:\n  speed: 3\n", "unknown config key"),
    ("numerics: 3\n", "must be a mapping"),
    ("cli:\n  workers: many\n", "wrong type"),
    ("numerics:\n  parabolic_tolerance: 2.0\n", "must lie in"),
    ("cli:\n  workers: 0\n", "workers must be positive"),
    ("oscillator:\n  quadrature_nodes: 4\n", "at least 8"),
    ("- just\n- a list\n", "must hold a mapping"),
    ("numerics: [unclosed\n", "not valid YAML"),
])
def test_invalid_files(config_dir, text, match):
    write(config_dir, "default.yml", text)
    with pytest.raises(ConfigError, match=match):
        load_config(config_dir)


def test_invalid_env_value(config_dir, monkeypatch):
    monkeypatch.setenv("SP2KIT__NUMERICS__RENORMALIZE_INTERVAL", "often")
    with pytest.raises(ConfigError) as excinfo:
        load_config(config_dir)
    assert excinfo.value.context["key"] == "numerics.renormalize_interval"
