import io
import logging

import pytest

from sp2kit.common import (
    EXIT_DOMAIN,
    EXIT_OVERFLOW,
    EXIT_USAGE,
    ConfigError,
    InvalidArgumentError,
    InvalidMatrixError,
    OutOfRangeError,
    ParseError,
    Sp2Error,
    Sp2OverflowError,
    init_logging,
    parse_level,
)


@pytest.mark.parametrize("error_type, code", [
    (InvalidArgumentError, EXIT_DOMAIN),
    (InvalidMatrixError, EXIT_DOMAIN),
    (OutOfRangeError, EXIT_DOMAIN),
    (Sp2OverflowError, EXIT_OVERFLOW),
    (ParseError, EXIT_USAGE),
    (ConfigError, EXIT_USAGE),
])
def test_exit_codes(error_type, code):
    err = error_type("boom")
    assert isinstance(err, Sp2Error)
    assert err.exit_code == code


def test_builtin_bases():
    assert isinstance(InvalidArgumentError("x"), ValueError)
    assert isinstance(InvalidMatrixError("x"), ValueError)
    assert isinstance(Sp2OverflowError("x"), OverflowError)


def test_message_includes_sorted_context():
    err = InvalidMatrixError("determinant differs from 1", tolerance=1e-10, det=2.0)
    assert str(err) == "determinant differs from 1 (det=2.0, tolerance=1e-10)"
    assert err.context == {"det": 2.0, "tolerance": 1e-10}
    assert str(ParseError("plain")) == "plain"


@pytest.mark.parametrize("name, level", [
    ("error", logging.ERROR),
    ("WARN", logging.WARNING),
    ("info", logging.INFO),
    (" debug ", logging.DEBUG),
    ("trace", logging.DEBUG),
])
def test_parse_level(name, level):
    assert parse_level(name) == level


def test_parse_level_rejects_unknown():
    with pytest.raises(ValueError, match="unknown log level"):
        parse_level("loud")


def test_init_logging_replaces_handler():
    stream = io.StringIO()
    init_logging("info", stream)
    logger = init_logging("debug", stream)
    owned = [h for h in logger.handlers if getattr(h, "_sp2kit_handler", False)]
    assert len(owned) == 1
    assert logger.level == logging.DEBUG

    logging.getLogger("sp2kit.sp2core.wigner").debug("hello %s", "there")
    assert "sp2kit.sp2core.wigner: hello there" in stream.getvalue()


def test_init_logging_reads_env(monkeypatch):
    monkeypatch.setenv("SP2KIT_LOG", "error")
    logger = init_logging(stream=io.StringIO())
    assert logger.level == logging.ERROR
