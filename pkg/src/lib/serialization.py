"""Deterministic JSON output helpers."""

import json
import math
from typing import Any

SIGNIFICANT_DIGITS = 12
ZERO_SNAP = 1e-11
DEVIATION_RESOLUTION = 10


def format_float(x: float) -> float:
    """Round to 12 significant digits, snapping solver noise around zero."""
    x = float(x)
    if not math.isfinite(x):
        return x
    if abs(x) < ZERO_SNAP:
        return 0.0
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}") + 0.0


def round_deviation(x: float) -> float:
    """Deviations are reported on a fixed 1e-10 absolute grid."""
    x = float(x)
    if not math.isfinite(x):
        return x
    return round(x, DEVIATION_RESOLUTION) + 0.0


def to_json(payload: Any) -> str:
    """Stable key order and indentation; trailing newline included."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
