import logging
import sys

from elliptic_moments.utils.config import get_settings


def get_logger(name: str) -> logging.Logger:
    """Return a logger object writing to stderr, so stdout stays free for results."""
    logger = logging.getLogger(name)
    logger.setLevel(get_settings().log_level.upper())
    if not logger.handlers:
        formatter = logging.Formatter('%(asctime)s:%(name)s:%(levelname)s:%(message)s')
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)
    logger.propagate = False
    return logger


def set_level(level: str) -> None:
    """Apply a level to every package logger created so far."""
    for name, logger in logging.Logger.manager.loggerDict.items():
        if name.startswith("elliptic_moments") and isinstance(logger, logging.Logger):
            logger.setLevel(level.upper())
