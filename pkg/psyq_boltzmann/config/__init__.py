import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "PSYQ_ENUM_CAP"

# 1 runs the suite sequentially
DEFAULT_SUITE_WORKERS = 1
SUITE_WORKERS_ENV = "PSYQ_SUITE_WORKERS"

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def _positive_int_from_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value <= 0:
        logger.warning("%s=%d is not positive, using %d", name, value, default)
        return default
    return value


def get_enum_cap():
    """Enumeration cap for explicit solution listing, overridable through PSYQ_ENUM_CAP."""
    return _positive_int_from_env(ENUM_CAP_ENV, DEFAULT_ENUM_CAP)


def get_suite_workers():
    return _positive_int_from_env(SUITE_WORKERS_ENV, DEFAULT_SUITE_WORKERS)


def data_path(name):
    """Path of a fixture file shipped in psyq_boltzmann/data."""
    return DATA_DIR / name
