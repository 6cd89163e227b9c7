"""Prediction, verification and certificate models."""

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.lib.serialization import format_float, round_deviation
from src.models.graph import CoronaKind
from src.models.spectrum import Spectrum


class RegularSpec(BaseModel):
    """Order, degree and adjacency spectrum of a regular graph."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    r: int = Field(..., ge=0)
    adjacency_eigenvalues: Tuple[float, ...]

    @model_validator(mode="after")
    def check_spectrum(self) -> "RegularSpec":
        eig = self.adjacency_eigenvalues
        if len(eig) != self.n:
            raise ValueError(f"expected {self.n} eigenvalues, got {len(eig)}")
        if any(b < a for a, b in zip(eig, eig[1:])):
            raise ValueError("adjacency eigenvalues must be sorted ascending")
        if max(abs(x) for x in eig) > self.r + 1e-6:
            raise ValueError(f"eigenvalue magnitude exceeds the degree {self.r}")
        if abs(eig[-1] - self.r) > 1e-6:
            raise ValueError(f"largest eigenvalue {eig[-1]} differs from the degree {self.r}")
        return self

    @property
    def m(self) -> int:
        return self.n * self.r // 2


class RealPolynomial(BaseModel):
    """Real polynomial, coefficients in ascending degree order."""

    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[float, ...]

    @field_validator("coefficients")
    @classmethod
    def trim_leading(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        scale = max((abs(c) for c in v), default=0.0)
        coeffs = list(v)
        while coeffs and abs(coeffs[-1]) <= 1e-14 * scale:
            coeffs.pop()
        if not coeffs:
            raise ValueError("zero polynomial")
        return tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


class EigenFamily(BaseModel):
    """A block of predicted eigenvalues, each repeated ``multiplicity`` times."""

    description: str
    source: str = Field(..., description="Which factor of the characteristic polynomial")
    values: List[float]
    multiplicity: int = Field(..., ge=0)

    @property
    def size(self) -> int:
        return len(self.values) * self.multiplicity

    def expanded(self) -> List[float]:
        return [x for x in self.values for _ in range(self.multiplicity)]


class PredictionReport(BaseModel):
    """Closed-form A_alpha spectrum of a composite of two regular graphs."""

    kind: CoronaKind
    alpha: float = Field(..., ge=0.0, le=1.0)
    order: int = Field(..., ge=0, description="Composite vertex count")
    families: List[EigenFamily]
    total: Spectrum

    @model_validator(mode="after")
    def check_sizes(self) -> "PredictionReport":
        if sum(f.size for f in self.families) != self.order or self.total.order != self.order:
            raise ValueError("family sizes do not add up to the composite order")
        return self

    def to_payload(self) -> dict:
        return {
            "kind": self.kind.value,
            "alpha": format_float(self.alpha),
            "order": self.order,
            "families": [
                {
                    "description": f.description,
                    "source": f.source,
                    "values": [format_float(x) for x in f.values],
                    "multiplicity": f.multiplicity,
                }
                for f in self.families
            ],
            "eigenvalues": [format_float(x) for x in self.total.eigenvalues],
        }


class VerifyCell(BaseModel):
    """Outcome of one alpha value of a verification run."""

    alpha: float = Field(..., ge=0.0, le=1.0)
    max_deviation: float = Field(..., ge=0.0)
    samples: int = Field(..., ge=0, description="Eigenvalues or lambda samples compared")
    passed: bool

    @field_validator("max_deviation")
    @classmethod
    def snap_deviation(cls, v: float) -> float:
        return round_deviation(v)


class VerifyReport(BaseModel):
    """Oracle-versus-closed-form comparison over an alpha grid."""

    kind: CoronaKind
    mode: Literal["spectrum", "charpoly"]
    g1: str
    g2: str
    tolerance: float = Field(..., gt=0)
    cells: List[VerifyCell]

    @property
    def max_deviation(self) -> float:
        return max((c.max_deviation for c in self.cells), default=0.0)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def to_payload(self) -> dict:
        return {
            "kind": self.kind.value,
            "mode": self.mode,
            "g1": self.g1,
            "g2": self.g2,
            "tolerance": self.tolerance,
            "alpha_grid": [format_float(c.alpha) for c in self.cells],
            "cells": [
                {
                    "alpha": format_float(c.alpha),
                    "max_deviation": c.max_deviation,
                    "samples": c.samples,
                    "passed": c.passed,
                }
                for c in self.cells
            ],
            "max_deviation": self.max_deviation,
            "passed": self.passed,
        }


class CospectralCertificate(BaseModel):
    """Numerical evidence that two composites are A_alpha-cospectral."""

    model_config = ConfigDict(frozen=True)

    kind: CoronaKind
    construction: Literal["regular_seeds", "coronal_attachments"] = "regular_seeds"
    seed_names: Tuple[str, str]
    attachment: str
    alpha_grid: Tuple[float, ...]
    max_deviation: float = Field(..., ge=0.0)
    tolerance: float = Field(..., gt=0)
    passed: bool
    tool_version: str

    @field_validator("max_deviation")
    @classmethod
    def snap_deviation(cls, v: float) -> float:
        return round_deviation(v)

    @model_validator(mode="after")
    def check_passed(self) -> "CospectralCertificate":
        if self.passed != (self.max_deviation <= self.tolerance):
            raise ValueError("passed flag disagrees with max_deviation and tolerance")
        return self
