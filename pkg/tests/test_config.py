import logging
import sys

from elliptic_moments.utils.config import Settings, get_settings
from elliptic_moments.utils.logger import get_logger, set_level


def test_defaults() -> None:
    settings = Settings(_env_file=None)
    assert settings.max_l == 24
    assert settings.workers == 1
    assert settings.mc_max_dim == 512
    assert settings.mc_default_dim == 300
    assert settings.mc_default_samples == 100


def test_environment_overrides(settings_env) -> None:
    settings_env(max_l=10, workers=3, log_level="DEBUG")
    settings = get_settings()
    assert settings.max_l == 10
    assert settings.workers == 3
    assert settings.log_level == "DEBUG"


def test_settings_are_cached(settings_env) -> None:
    settings_env(mc_max_dim=64)
    assert get_settings() is get_settings()


def test_logger_writes_to_stderr_once() -> None:
    logger = get_logger("elliptic_moments.test_logger")
    again = get_logger("elliptic_moments.test_logger")
    assert logger is again
    assert len(logger.handlers) == 1
    assert logger.handlers[0].stream is sys.stderr
    assert logger.propagate is False


def test_set_level_reaches_package_loggers() -> None:
    logger = get_logger("elliptic_moments.test_level")
    set_level("warning")
    try:
        assert logger.level == logging.WARNING
    finally:
        set_level(get_settings().log_level)
