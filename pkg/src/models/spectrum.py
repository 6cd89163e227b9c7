"""Matrix and spectrum data models."""

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.lib.config import get_settings


class Alpha(BaseModel):
    """Convex weight of the degree matrix in A_alpha = alpha*D + (1 - alpha)*A."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0.0, le=1.0, description="Real alpha in [0, 1]")

    @classmethod
    def coerce(cls, alpha: Union["Alpha", float]) -> float:
        """Validate a bare float or an Alpha and return the float."""
        if isinstance(alpha, Alpha):
            return alpha.value
        return cls(value=alpha).value


class SymmetricMatrix(BaseModel):
    """Dense, finite, real symmetric matrix (read-only storage)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray

    @field_validator("entries", mode="before")
    @classmethod
    def check_symmetric(cls, v) -> np.ndarray:
        arr = np.array(v, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix has non-finite entries")
        if not np.allclose(arr, arr.T, rtol=0.0, atol=1e-12):
            raise ValueError("matrix is not symmetric")
        arr.setflags(write=False)
        return arr

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])


class EigenGroup(BaseModel):
    """A representative eigenvalue and its multiplicity."""

    value: float
    multiplicity: int = Field(..., ge=1)


class Spectrum(BaseModel):
    """Sorted eigenvalue multiset with tolerance-grouped multiplicities."""

    model_config = ConfigDict(frozen=True)

    eigenvalues: Tuple[float, ...]
    tolerance: float = Field(default=1e-6, gt=0, description="Grouping tolerance")

    @field_validator("eigenvalues")
    @classmethod
    def check_sorted(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("eigenvalues must be sorted ascending")
        return v

    @classmethod
    def from_values(
        cls, values: Sequence[float], tolerance: Optional[float] = None
    ) -> "Spectrum":
        """Build a spectrum from unsorted values."""
        tol = tolerance if tolerance is not None else get_settings().group_tol
        return cls(eigenvalues=tuple(sorted(float(x) for x in values)), tolerance=tol)

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    @property
    def groups(self) -> List[EigenGroup]:
        """Chain consecutive sorted values closer than the tolerance."""
        groups: List[List[float]] = []
        for x in self.eigenvalues:
            if groups and x - groups[-1][-1] <= self.tolerance:
                groups[-1].append(x)
            else:
                groups.append([x])
        return [
            EigenGroup(value=float(np.mean(g)), multiplicity=len(g)) for g in groups
        ]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.eigenvalues, dtype=float)
