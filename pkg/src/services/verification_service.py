import asyncio
import logging
from typing import List, Literal, Optional, Sequence, Union

from src.lib.config import get_settings
from src.models.graph import CoronaKind, Graph
from src.models.reports import VerifyCell, VerifyReport
from src.models.spectrum import Alpha
from src.services.closed_form_service import verify_charpoly_cell, verify_spectrum_cell

logger = logging.getLogger(__name__)

Mode = Literal["spectrum", "charpoly"]


class VerificationService:
    """Runs closed-form versus oracle comparisons over an alpha grid."""

    def __init__(self, max_concurrent: Optional[int] = None):
        self.max_concurrent = max_concurrent or get_settings().max_concurrent

    async def verify_prediction(
        self,
        kind: Union[CoronaKind, str],
        g1: Graph,
        g2: Graph,
        alpha_grid: Sequence[float],
        tol: Optional[float] = None,
        mode: Mode = "spectrum",
        g1_name: str = "G1",
        g2_name: str = "G2",
    ) -> VerifyReport:
        """Compare prediction and oracle at every alpha of the grid.

        Spectrum mode needs regular G1 and G2; charpoly mode samples lambda
        beyond the spectral radius and accepts any G2.
        """
        kind = kind if isinstance(kind, CoronaKind) else CoronaKind.parse(kind)
        tol = get_settings().verify_tol if tol is None else tol
        if tol <= 0:
            raise ValueError(f"tolerance must be positive, got {tol}")
        grid = sorted({Alpha.coerce(a) for a in alpha_grid})
        if not grid:
            raise ValueError("alpha grid is empty")
        cell_fn = verify_spectrum_cell if mode == "spectrum" else verify_charpoly_cell

        try:
            semaphore = asyncio.Semaphore(self.max_concurrent)

            async def run_cell(alpha: float) -> VerifyCell:
                async with semaphore:
                    cell = await asyncio.to_thread(cell_fn, kind, g1, g2, alpha, tol)
                    logger.info(
                        f"{kind.value} {mode} alpha={alpha}: "
                        f"deviation {cell.max_deviation:.3e} ({'pass' if cell.passed else 'FAIL'})"
                    )
                    return cell

            cells: List[VerifyCell] = await asyncio.gather(*[run_cell(a) for a in grid])
            cells.sort(key=lambda c: c.alpha)

            return VerifyReport(
                kind=kind,
                mode=mode,
                g1=g1_name,
                g2=g2_name,
                tolerance=tol,
                cells=cells,
            )

        except Exception as e:
            logger.error(f"Verification of {kind.value} ({mode}) failed: {str(e)}")
            raise


# Global verification service instance
_verification_service: Optional[VerificationService] = None


def get_verification_service() -> VerificationService:
    """Get or create the global verification service instance"""
    global _verification_service
    if _verification_service is None:
        _verification_service = VerificationService()
    return _verification_service


def verify_prediction(
    kind: Union[CoronaKind, str],
    g1: Graph,
    g2: Graph,
    alpha_grid: Sequence[float],
    tol: Optional[float] = None,
    mode: Mode = "spectrum",
    g1_name: str = "G1",
    g2_name: str = "G2",
) -> VerifyReport:
    """Blocking entry point for callers outside an event loop."""
    return asyncio.run(
        get_verification_service().verify_prediction(
            kind, g1, g2, alpha_grid, tol=tol, mode=mode, g1_name=g1_name, g2_name=g2_name
        )
    )
