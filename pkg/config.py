"""
Configuration file for the tracecode toolkit
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

BASE_DIR = Path(__file__).resolve().parent


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(float(value)) if value else default


def _env_flag(name: str) -> bool:
    return os.getenv(name, '').strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Base configuration class"""

    # Field construction
    FIELD_CAP = _env_int('TRACECODE_FIELD_CAP', 2 ** 26)
    ZECH_CAP = _env_int('TRACECODE_ZECH_CAP', 2 ** 22)
    CONWAY_DIR = os.getenv('TRACECODE_CONWAY_DIR')

    # Root search and power sums
    ROOT_SEARCH_CAP = _env_int('TRACECODE_ROOT_SEARCH_CAP', 2 ** 22)
    FULL_POWER_SUM_CAP = _env_int('TRACECODE_FULL_POWER_SUM_CAP', 2 ** 16)

    # Distance certification
    ENUMERATION_CAP = _env_int('TRACECODE_ENUMERATION_CAP', 2 ** 24)
    SUBSET_BUDGET = _env_int('TRACECODE_SUBSET_BUDGET', 2_000_000)
    SAMPLE_TRIALS = _env_int('TRACECODE_SAMPLE_TRIALS', 2000)
    RANDOM_SEED = _env_int('TRACECODE_SEED', 20240601)

    # Reports
    GOLDEN_DIR = Path(os.getenv('TRACECODE_GOLDEN_DIR', BASE_DIR / 'data' / 'goldens'))
    LOG_LEVEL = os.getenv('TRACECODE_LOG_LEVEL', 'INFO')
    REPORT_SCHEMA = 1

    HEAVY = _env_flag('TRACECODE_HEAVY')
    JOBS = _env_int('TRACECODE_JOBS', 1)


class DefaultConfig(Config):
    """Default configuration: heavy rows follow the environment"""


class HeavyConfig(Config):
    """Heavy configuration: every golden row is processed"""
    HEAVY = True


class LightConfig(Config):
    """Light configuration used by the test-suite"""
    HEAVY = False
    SUBSET_BUDGET = 200_000
    SAMPLE_TRIALS = 500


# Configuration dictionary
config = {
    'default': DefaultConfig,
    'heavy': HeavyConfig,
    'light': LightConfig,
}
