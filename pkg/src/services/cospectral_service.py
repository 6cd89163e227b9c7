"""Spectrum comparison, the regular seed catalog and cospectral certificates."""

import logging
from functools import lru_cache
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src import __version__
from src.lib.config import get_settings
from src.lib.errors import CospectralPreconditionError
from src.lib.serialization import round_deviation
from src.models.graph import CoronaKind, Graph
from src.models.reports import CospectralCertificate
from src.models.spectrum import Alpha, Spectrum
from src.services.closed_form_service import sample_lambdas
from src.services.corona_service import compose
from src.services.graph_service import degree_info, rook_graph, shrikhande_graph, to_networkx
from src.services.spectra_service import a_alpha_matrix, m_coronal, spectral_radius, sym_eigenvalues

logger = logging.getLogger(__name__)

DEFAULT_ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
CATALOG_TOL = 1e-8
CORONAL_TOL = 1e-8

_CATALOG: Dict[str, Tuple[Callable[[], Graph], Callable[[], Graph]]] = {
    "shrikhande_rook4": (shrikhande_graph, lambda: rook_graph(4)),
}


def spectra_equal(s1: Spectrum, s2: Spectrum, tol: float) -> Tuple[bool, float]:
    """Sorted elementwise comparison; different sizes never compare equal."""
    if s1.order != s2.order:
        return False, float("inf")
    if s1.order == 0:
        return True, 0.0
    deviation = float(np.max(np.abs(s1.as_array() - s2.as_array())))
    return deviation <= tol, deviation


def _a_alpha_spectrum(graph: Graph, alpha: float) -> Spectrum:
    return sym_eigenvalues(a_alpha_matrix(graph, alpha))


def catalog_names() -> Tuple[str, ...]:
    return tuple(sorted(_CATALOG))


@lru_cache(maxsize=None)
def known_regular_cospectral_pair(name: str) -> Tuple[Graph, Graph]:
    """Two non-isomorphic regular A-cospectral graphs, re-verified on load.

    Raises:
        ValueError: Unknown catalog key
        CospectralPreconditionError: If the stored pair fails the oracle check
    """
    if name not in _CATALOG:
        raise ValueError(f"unknown cospectral pair {name!r}; expected one of {catalog_names()}")
    first, second = (build() for build in _CATALOG[name])
    info1, info2 = degree_info(first), degree_info(second)
    if not (info1.is_regular and info1.regular_degree == info2.regular_degree):
        raise CospectralPreconditionError(f"catalog pair {name} is not regular of one degree")
    equal, deviation = spectra_equal(
        _a_alpha_spectrum(first, 0.0), _a_alpha_spectrum(second, 0.0), CATALOG_TOL
    )
    if not equal:
        raise CospectralPreconditionError(
            f"catalog pair {name} is not A-cospectral (deviation {deviation:.3e})"
        )
    logger.info(f"Loaded cospectral pair {name}: n={first.n}, r={info1.regular_degree}")
    return first, second


def neighbourhood_triangle_profile(graph: Graph) -> Tuple[int, ...]:
    """Sorted per-vertex count of triangles inside the open neighbourhood.

    Distinguishes the Shrikhande graph (neighbourhoods are 6-cycles) from the
    4x4 rook's graph (two disjoint triangles), which share every parameter of
    a strongly regular graph.
    """
    g = to_networkx(graph)
    counts = []
    for v in g.nodes:
        local = g.subgraph(g[v])
        counts.append(sum(nx.triangles(local).values()) // 3)
    return tuple(sorted(counts))


def is_a_alpha_cospectral(
    g: Graph,
    h: Graph,
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    tol: Optional[float] = None,
) -> Tuple[bool, float]:
    """Whether A_alpha(g) and A_alpha(h) share a spectrum at every alpha of the grid."""
    tol = get_settings().verify_tol if tol is None else tol
    worst = 0.0
    for alpha in alpha_grid:
        _, deviation = spectra_equal(_a_alpha_spectrum(g, alpha), _a_alpha_spectrum(h, alpha), tol)
        worst = max(worst, deviation)
    return worst <= tol, worst


def _check_regular_seeds(seeds: Tuple[Graph, Graph], tol: float) -> None:
    g1, g2 = seeds
    info1, info2 = degree_info(g1), degree_info(g2)
    if g1.n != g2.n:
        raise CospectralPreconditionError(f"seeds have different orders {g1.n} and {g2.n}")
    if not (info1.is_regular and info2.is_regular):
        raise CospectralPreconditionError("seeds must both be regular")
    if info1.regular_degree != info2.regular_degree:
        raise CospectralPreconditionError(
            f"seeds have different degrees {info1.regular_degree} and {info2.regular_degree}"
        )
    equal, deviation = spectra_equal(_a_alpha_spectrum(g1, 0.0), _a_alpha_spectrum(g2, 0.0), tol)
    if not equal:
        raise CospectralPreconditionError(f"seeds are not A-cospectral (deviation {deviation:.3e})")


def _certify(
    kind: CoronaKind,
    pair: Tuple[Graph, Graph],
    alpha_grid: Sequence[float],
    tol: float,
    construction: str,
    seed_names: Tuple[str, str],
    attachment: str,
) -> CospectralCertificate:
    grid = tuple(Alpha.coerce(a) for a in alpha_grid)
    _, worst = is_a_alpha_cospectral(pair[0], pair[1], grid, tol)
    worst = round_deviation(worst)
    certificate = CospectralCertificate(
        kind=kind,
        construction=construction,
        seed_names=seed_names,
        attachment=attachment,
        alpha_grid=grid,
        max_deviation=worst,
        tolerance=tol,
        passed=worst <= tol,
        tool_version=__version__,
    )
    logger.info(
        f"Certificate {kind.value} {seed_names[0]}/{seed_names[1]} with {attachment}: "
        f"max deviation {worst:.3e}, {'passed' if certificate.passed else 'FAILED'}"
    )
    return certificate


def build_cospectral_pair(
    kind: Union[CoronaKind, str],
    seeds: Tuple[Graph, Graph],
    attachment: Graph,
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    tol: Optional[float] = None,
    seed_names: Tuple[str, str] = ("G1", "G2"),
    attachment_name: str = "H",
) -> CospectralCertificate:
    """Certify G1 (kind) H and G2 (kind) H for A-cospectral regular seeds G1, G2.

    Raises:
        CospectralPreconditionError: Seeds differ in order, degree or A-spectrum
    """
    kind = kind if isinstance(kind, CoronaKind) else CoronaKind.parse(kind)
    tol = get_settings().verify_tol if tol is None else tol
    try:
        _check_regular_seeds(seeds, tol)
        pair = (compose(kind, seeds[0], attachment)[0], compose(kind, seeds[1], attachment)[0])
        return _certify(
            kind, pair, alpha_grid, tol, "regular_seeds", seed_names, attachment_name
        )
    except Exception as e:
        logger.error(f"Cospectral construction {kind.value} failed: {str(e)}")
        raise


def coronal_equal_sampled(
    h1: Graph, h2: Graph, alpha: float, samples: Sequence[float], tol: float = CORONAL_TOL
) -> Tuple[bool, float]:
    """Compare the coronals of A_alpha(h1) and A_alpha(h2) at every sample.

    Raises:
        PoleError: If a sample is at a pole of either coronal
    """
    m1, m2 = a_alpha_matrix(h1, alpha), a_alpha_matrix(h2, alpha)
    worst = 0.0
    for lam in samples:
        worst = max(worst, abs(m_coronal(m1, float(lam)) - m_coronal(m2, float(lam))))
    return worst <= tol, worst


def build_coronal_pair(
    kind: Union[CoronaKind, str],
    base: Graph,
    attachments: Tuple[Graph, Graph],
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    tol: Optional[float] = None,
    base_name: str = "G",
    attachment_names: Tuple[str, str] = ("H1", "H2"),
    samples: int = 10,
) -> CospectralCertificate:
    """Certify G (kind) H1 and G (kind) H2 for regular G and A_alpha-cospectral H1, H2
    with equal coronals.

    Raises:
        CospectralPreconditionError: Base not regular, or attachments differ in
            spectrum or coronal at some alpha
    """
    kind = kind if isinstance(kind, CoronaKind) else CoronaKind.parse(kind)
    tol = get_settings().verify_tol if tol is None else tol
    h1, h2 = attachments
    try:
        if base.n == 0 or not degree_info(base).is_regular:
            raise CospectralPreconditionError("base graph must be non-empty and regular")
        for alpha in alpha_grid:
            equal, deviation = spectra_equal(
                _a_alpha_spectrum(h1, alpha), _a_alpha_spectrum(h2, alpha), tol
            )
            if not equal:
                raise CospectralPreconditionError(
                    f"attachments are not A_alpha-cospectral at alpha={alpha} "
                    f"(deviation {deviation:.3e})"
                )
            radius = max(
                spectral_radius(a_alpha_matrix(h1, alpha)),
                spectral_radius(a_alpha_matrix(h2, alpha)),
            )
            same, gap = coronal_equal_sampled(h1, h2, alpha, sample_lambdas(radius, samples))
            if not same:
                raise CospectralPreconditionError(
                    f"attachment coronals differ at alpha={alpha} (gap {gap:.3e})"
                )
        pair = (compose(kind, base, h1)[0], compose(kind, base, h2)[0])
        return _certify(
            kind, pair, alpha_grid, tol, "coronal_attachments", attachment_names, base_name
        )
    except Exception as e:
        logger.error(f"Coronal construction {kind.value} failed: {str(e)}")
        raise
