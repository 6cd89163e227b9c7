"""A_alpha assembly, the eigenvalue/determinant oracle, M-coronals and energy."""

import logging
from typing import Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from src.lib.config import get_settings
from src.lib.errors import PoleError, RegularityError
from src.models.graph import Graph
from src.models.reports import RegularSpec
from src.models.spectrum import Alpha, Spectrum, SymmetricMatrix
from src.services.graph_service import adjacency_matrix, degree_info

logger = logging.getLogger(__name__)

AlphaLike = Union[Alpha, float]


def a_alpha_matrix(graph: Graph, alpha: AlphaLike) -> SymmetricMatrix:
    """A_alpha(G) = alpha*D(G) + (1 - alpha)*A(G)."""
    a = Alpha.coerce(alpha)
    adjacency = adjacency_matrix(graph).astype(float)
    degrees = np.asarray(degree_info(graph).degrees, dtype=float)
    entries = a * np.diag(degrees).reshape(graph.n, graph.n) + (1.0 - a) * adjacency
    return SymmetricMatrix(entries=entries)


def _eigvalsh(matrix: SymmetricMatrix) -> np.ndarray:
    if matrix.order == 0:
        return np.zeros(0)
    return scipy.linalg.eigvalsh(matrix.entries, check_finite=True)


def sym_eigenvalues(matrix: SymmetricMatrix) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending (LAPACK oracle)."""
    return Spectrum.from_values(_eigvalsh(matrix))


def spectral_radius(matrix: SymmetricMatrix) -> float:
    eig = _eigvalsh(matrix)
    return float(np.max(np.abs(eig))) if eig.size else 0.0


def charpoly_oracle(matrix: SymmetricMatrix, lam: float) -> Tuple[float, float]:
    """Sign and log|det| of (lam*I - M), the characteristic-polynomial oracle."""
    shifted = lam * np.eye(matrix.order) - matrix.entries
    sign, logabsdet = np.linalg.slogdet(shifted)
    return float(sign), float(logabsdet)


def m_coronal(matrix: SymmetricMatrix, lam: float) -> float:
    """Gamma_M(lam): sum of the entries of (lam*I - M)^-1.

    Raises:
        PoleError: If lam lies within the pole tolerance of an eigenvalue of M
    """
    tol = get_settings().pole_tol
    eig = _eigvalsh(matrix)
    if eig.size and float(np.min(np.abs(eig - lam))) < tol:
        raise PoleError(f"lambda={lam} is within {tol} of an eigenvalue of M")
    ones = np.ones(matrix.order)
    x = np.linalg.solve(lam * np.eye(matrix.order) - matrix.entries, ones)
    return float(np.sum(x))


def m_coronal_regular(n: int, row_sum: float, lam: float) -> float:
    """Gamma_M(lam) = n / (lam - a) for a matrix whose row sums all equal a."""
    tol = get_settings().pole_tol
    if abs(lam - row_sum) < tol:
        raise PoleError(f"lambda={lam} coincides with the row sum {row_sum}")
    return n / (lam - row_sum)


def a_alpha_energy(graph: Graph, alpha: AlphaLike) -> float:
    """Sum of |lambda_i(A_alpha) - 2*alpha*m/n| over the oracle spectrum."""
    if graph.n < 1:
        raise ValueError("A_alpha-energy needs at least one vertex")
    a = Alpha.coerce(alpha)
    shift = 2.0 * a * graph.m / graph.n
    eig = _eigvalsh(a_alpha_matrix(graph, a))
    return float(np.sum(np.abs(eig - shift)))


def regular_spec(graph: Graph) -> RegularSpec:
    """Order, degree and oracle adjacency spectrum of a regular graph.

    Raises:
        RegularityError: If the graph is empty or not regular
    """
    info = degree_info(graph)
    if graph.n == 0 or not info.is_regular:
        raise RegularityError(f"graph with degrees {sorted(set(info.degrees))} is not regular")
    spectrum = sym_eigenvalues(a_alpha_matrix(graph, 0.0))
    # LAPACK can overshoot the exact top eigenvalue r by a few ulps.
    eig = tuple(min(x, float(info.regular_degree)) for x in spectrum.eigenvalues)
    return RegularSpec(n=graph.n, r=info.regular_degree, adjacency_eigenvalues=eig)


def line_graph_spectrum_regular(
    spectrum: Union[Spectrum, Sequence[float]], n: int, m: int, r: int
) -> Spectrum:
    """Adjacency spectrum of L(G) for an r-regular G with n vertices and m edges.

    Returns {-2 repeated m-n times} together with {lambda_i + r - 2}. When m < n
    (r = 1) the shifted values already contain n - m copies of -2, which are removed.

    Raises:
        RegularityError: If m != n*r/2
    """
    if 2 * m != n * r:
        raise RegularityError(f"m={m} is not n*r/2 for n={n}, r={r}")
    values = spectrum.eigenvalues if isinstance(spectrum, Spectrum) else tuple(spectrum)
    if len(values) != n:
        raise ValueError(f"expected {n} adjacency eigenvalues, got {len(values)}")

    shifted = [x + r - 2 for x in values]
    if m >= n:
        return Spectrum.from_values([-2.0] * (m - n) + shifted)

    tol = get_settings().group_tol
    excess = n - m
    kept = []
    for x in sorted(shifted):
        if excess and abs(x + 2.0) <= tol:
            excess -= 1
            continue
        kept.append(x)
    if excess:
        raise RegularityError("spectrum lacks the -2 eigenvalues required when m < n")
    return Spectrum.from_values(kept)
