"""Services package."""

from .cospectral_service import (
    build_coronal_pair,
    build_cospectral_pair,
    known_regular_cospectral_pair,
)
from .corona_service import compose, degrees_of_composite
from .closed_form_service import (
    eval_proposition_charpoly,
    eval_proposition_log_charpoly,
    predict_spectrum,
    solve_real_polynomial,
)
from .verification_service import VerificationService, get_verification_service, verify_prediction

__all__ = [
    "build_coronal_pair",
    "build_cospectral_pair",
    "known_regular_cospectral_pair",
    "compose",
    "degrees_of_composite",
    "eval_proposition_charpoly",
    "eval_proposition_log_charpoly",
    "predict_spectrum",
    "solve_real_polynomial",
    "VerificationService",
    "get_verification_service",
    "verify_prediction",
]
