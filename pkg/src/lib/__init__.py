"""Utilities and infrastructure."""

from .config import Settings, get_settings, reset_settings
from .errors import (
    CospectralPreconditionError,
    FormulaCountError,
    GraphValidationError,
    PoleError,
    RegularityError,
)

__all__ = [
    "Settings",
    "get_settings",
    "reset_settings",
    "CospectralPreconditionError",
    "FormulaCountError",
    "GraphValidationError",
    "PoleError",
    "RegularityError",
]
