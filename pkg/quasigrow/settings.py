"""
Settings for quasigrow.

Values come from the process environment, optionally seeded from a .env file
at the repository root. Everything here is read once at import time;
malformed values fall back to their defaults and are reported by
check_configuration.
"""

import os
from pathlib import Path
from typing import List

import dotenv

from quasigrow.exceptions import ConfigurationError

# Load environment variables from .env file
BASE_DIR = Path(__file__).resolve().parent.parent
dotenv.load_dotenv(BASE_DIR / '.env')


def env_flag(name: str, default: str = 'False') -> bool:
    """Read a boolean flag the same way DEBUG_MODE is read."""
    return os.environ.get(name, default).lower() in ('true', '1', 'yes')


def env_int(name: str, default: int) -> int:
    """
    Read an integer setting.

    Raises:
        ConfigurationError: if the variable is set but is not an integer
    """
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc


# Errors found while reading the environment; raised by check_configuration
CONFIGURATION_ERRORS: List[ConfigurationError] = []


def _int_setting(name: str, default: int) -> int:
    try:
        return env_int(name, default)
    except ConfigurationError as exc:
        CONFIGURATION_ERRORS.append(exc)
        return default


def check_configuration() -> None:
    """
    Raise the first error met while reading the environment.

    Raises:
        ConfigurationError: if any integer setting was malformed
    """
    if CONFIGURATION_ERRORS:
        raise CONFIGURATION_ERRORS[0]


# Exhaustive enumeration budget (maximum word length scanned as 2^L)
ENUMERATION_BUDGET = _int_setting('QUASIGROW_BUDGET', 24)

# Process shards for deception enumeration; 1 keeps everything in-process
ENUMERATION_WORKERS = max(1, _int_setting('QUASIGROW_WORKERS', 1))

# Default number of compositions tried when looking for a BB segment
MAX_COMPOSITION_DEPTH = _int_setting('QUASIGROW_MAX_DEPTH', 12)

# Logging Configuration
DEBUG_MODE = env_flag('DEBUG_MODE')
LOG_LEVEL = os.environ.get('QUASIGROW_LOG_LEVEL', 'DEBUG' if DEBUG_MODE else 'INFO').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{asctime}] {levelname} {name} {message}',
            'style': '{',
        },
        'simple': {
            'format': '[{levelname}] {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose' if DEBUG_MODE else 'simple',
        },
    },
    'loggers': {
        'quasigrow': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
