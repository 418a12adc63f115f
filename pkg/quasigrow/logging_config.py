"""
Logging configuration utilities.

Applies the LOGGING dictionary from quasigrow.settings and keeps chatty
third-party loggers at WARNING regardless of the environment settings.
"""

import logging
import logging.config
from typing import Optional

from quasigrow import settings

NOISY_LOGGERS = (
    'hypothesis',
    'concurrent.futures',
    'asyncio',
)


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure the quasigrow loggers for a command-line run.

    Args:
        level: optional level name overriding settings.LOG_LEVEL (e.g. from -v)
    """
    logging.config.dictConfig(settings.LOGGING)

    if level:
        logging.getLogger('quasigrow').setLevel(level.upper())

    for name in NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    logger = logging.getLogger('quasigrow.logging')
    logger.debug("Logging configured at %s", logging.getLevelName(logging.getLogger('quasigrow').level))
