"""Unit tests for the alpha-grid verification service."""

import pytest

from src.lib.config import reset_settings
from src.lib.errors import RegularityError
from src.services.verification_service import (
    VerificationService,
    get_verification_service,
    verify_prediction,
)


class TestVerificationService:
    """Unit tests for VerificationService."""

    async def test_spectrum_mode(self, c4, k2):
        """Test cells are deduplicated, sorted and all pass."""
        service = VerificationService(max_concurrent=2)
        report = await service.verify_prediction(
            "q_vertex", c4, k2, [0.5, 0.0, 0.5, 1.0], g1_name="cycle:4", g2_name="complete:2"
        )

        assert [c.alpha for c in report.cells] == [0.0, 0.5, 1.0]
        assert report.passed
        assert all(c.samples == 16 for c in report.cells)
        assert report.g1 == "cycle:4"
        assert report.tolerance == 1e-6

    async def test_charpoly_mode(self, c4, p3):
        """Test charpoly mode accepts a non-regular attachment."""
        service = VerificationService()
        report = await service.verify_prediction(
            "splitting_add_vertex", c4, p3, [0.0, 0.25, 0.75], mode="charpoly"
        )
        assert report.passed
        assert report.mode == "charpoly"
        assert all(c.samples == 10 for c in report.cells)

    async def test_spectrum_mode_needs_regular_g2(self, c4, p3):
        """Test spectrum mode propagates the regularity error."""
        with pytest.raises(RegularityError):
            await VerificationService().verify_prediction("total", c4, p3, [0.5])

    @pytest.mark.parametrize("tol", [0.0, -1e-6])
    async def test_tolerance_must_be_positive(self, tol, c4, k2):
        """Test a non-positive tolerance is rejected."""
        with pytest.raises(ValueError):
            await VerificationService().verify_prediction("total", c4, k2, [0.5], tol=tol)

    async def test_empty_grid(self, c4, k2):
        """Test an empty alpha grid is rejected."""
        with pytest.raises(ValueError):
            await VerificationService().verify_prediction("total", c4, k2, [])

    async def test_alpha_out_of_range(self, c4, k2):
        """Test an alpha outside [0, 1] is rejected."""
        with pytest.raises(ValueError):
            await VerificationService().verify_prediction("total", c4, k2, [1.5])

    async def test_corona_has_no_closed_form(self, c4, k2):
        """Test kinds without a closed form cannot be verified."""
        with pytest.raises(ValueError):
            await VerificationService().verify_prediction("corona", c4, k2, [0.5])

    def test_concurrency_from_settings(self, monkeypatch):
        """Test the fan-out width defaults to CORONA_MAX_CONCURRENT."""
        monkeypatch.setenv("CORONA_MAX_CONCURRENT", "2")
        reset_settings()
        assert VerificationService().max_concurrent == 2


class TestVerifyPrediction:
    """Unit tests for the blocking entry point."""

    def test_sync_wrapper(self, k4, k2):
        """Test the blocking call returns the same report shape."""
        report = verify_prediction("total", k4, k2, [0.0, 1.0], tol=1e-6)
        assert report.passed
        assert len(report.cells) == 2
        assert report.max_deviation <= 1e-6

    def test_singleton(self):
        """Test the global service is created once."""
        assert get_verification_service() is get_verification_service()
