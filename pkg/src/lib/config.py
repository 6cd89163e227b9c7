"""Runtime configuration loaded from the environment."""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Numerical tolerances and execution knobs."""

    log_level: str = Field(default="INFO", description="Root log level for the CLI")
    group_tol: float = Field(default=1e-6, gt=0, description="Eigenvalue grouping tolerance")
    pole_tol: float = Field(default=1e-8, gt=0, description="Minimum distance from a coronal pole")
    verify_tol: float = Field(default=1e-6, gt=0, description="Default verification tolerance")
    max_concurrent: int = Field(default=4, ge=1, description="Verification fan-out width")
    sample_seed: int = Field(default=20240601, ge=0, description="Seed for lambda samples")


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a number, got {raw!r}") from e


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def get_settings_config() -> dict:
    """Get settings values from environment variables.

    Returns:
        Settings keyword arguments
    """
    load_dotenv()
    return {
        "log_level": os.getenv("CORONA_LOG_LEVEL", "INFO").upper(),
        "group_tol": _env_float("CORONA_GROUP_TOL", 1e-6),
        "pole_tol": _env_float("CORONA_POLE_TOL", 1e-8),
        "verify_tol": _env_float("CORONA_VERIFY_TOL", 1e-6),
        "max_concurrent": _env_int("CORONA_MAX_CONCURRENT", 4),
        "sample_seed": _env_int("CORONA_SAMPLE_SEED", 20240601),
    }


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the settings instance.

    Returns:
        Settings instance
    """
    global _settings

    if _settings is None:
        _settings = Settings(**get_settings_config())
        logger.debug(f"Loaded settings: {_settings.model_dump()}")

    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None
