"""
Runtime configuration.

This module handles:
- Loading a local .env file
- Reading library defaults from environment variables
- Caching the resulting settings for the process

Every value here is only a default; command-line flags override it.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Library-wide defaults."""
    log_level: str = "INFO"
    direct_reduction_cap: int = 20
    vertex_enum_limit: int = 100_000
    verify_seed: int = 0
    verify_trials: int = 50


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"Environment variable {name} must be nonnegative, got {value}")
    return value


def load_settings() -> Settings:
    """
    Build settings from environment variables.

    Environment variables:
    - LOG_LEVEL: Logging level name (default: INFO)
    - DIRECT_REDUCTION_CAP: Largest m accepted by the direct l1 reduction (default: 20)
    - VERTEX_ENUM_LIMIT: Subset budget of the vertex-enumeration oracle (default: 100000)
    - VERIFY_SEED: Seed of the verification suites (default: 0)
    - VERIFY_TRIALS: Trials per verification suite (default: 50)

    Returns:
        Settings instance

    Raises:
        ValueError: If a numeric variable is malformed
    """
    return Settings(
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
        direct_reduction_cap=_int_from_env("DIRECT_REDUCTION_CAP", 20),
        vertex_enum_limit=_int_from_env("VERTEX_ENUM_LIMIT", 100_000),
        verify_seed=_int_from_env("VERIFY_SEED", 0),
        verify_trials=_int_from_env("VERIFY_TRIALS", 50),
    )


# Global settings (for convenience)
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the global settings."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the environment is read again."""
    global _settings
    _settings = None
