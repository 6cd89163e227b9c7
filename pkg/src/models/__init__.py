"""Data models package."""

from .graph import CompositeLayout, CoronaKind, DegreeInfo, Graph, IndexRange
from .reports import (
    CospectralCertificate,
    EigenFamily,
    PredictionReport,
    RealPolynomial,
    RegularSpec,
    VerifyCell,
    VerifyReport,
)
from .spectrum import Alpha, EigenGroup, Spectrum, SymmetricMatrix

__all__ = [
    "CompositeLayout",
    "CoronaKind",
    "DegreeInfo",
    "Graph",
    "IndexRange",
    "CospectralCertificate",
    "EigenFamily",
    "PredictionReport",
    "RealPolynomial",
    "RegularSpec",
    "VerifyCell",
    "VerifyReport",
    "Alpha",
    "EigenGroup",
    "Spectrum",
    "SymmetricMatrix",
]
