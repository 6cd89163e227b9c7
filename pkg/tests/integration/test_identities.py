"""Integration tests for the incidence, A_alpha and energy identities."""

import numpy as np
import pytest

from src.models.graph import CoronaKind
from src.services.corona_service import compose
from src.services.graph_service import (
    adjacency_matrix,
    degree_info,
    degree_matrix,
    generate,
    incidence_matrix,
    line_graph,
)
from src.services.spectra_service import (
    a_alpha_energy,
    a_alpha_matrix,
    m_coronal,
    m_coronal_regular,
    regular_spec,
    sym_eigenvalues,
)

CORPUS = ["cycle:3", "cycle:4", "cycle:5", "cycle:6", "complete:4", "petersen", "path:3", "path:5"]
REGULAR = [name for name in CORPUS if not name.startswith("path")]
ALPHAS = [0.0, 0.25, 0.5, 0.75, 1.0]
KINDS = [k.value for k in CoronaKind]
COMPOSITE_PAIRS = [("cycle:4", "complete:2"), ("petersen", "path:3"), ("complete:4", "cycle:3")]


class TestIncidenceIdentities:
    """R R^T = A + D and R^T R = B + 2I, exactly in integers."""

    @pytest.mark.parametrize("name", CORPUS)
    def test_vertex_side(self, name):
        """Test R R^T = A + D."""
        graph = generate(name)
        r = incidence_matrix(graph)
        np.testing.assert_array_equal(r @ r.T, adjacency_matrix(graph) + degree_matrix(graph))

    @pytest.mark.parametrize("name", CORPUS)
    def test_edge_side(self, name):
        """Test R^T R = A(L(G)) + 2I with the constructed line graph."""
        graph = generate(name)
        r = incidence_matrix(graph)
        expected = adjacency_matrix(line_graph(graph)) + 2 * np.eye(graph.m, dtype=np.int64)
        np.testing.assert_array_equal(r.T @ r, expected)


class TestRegularSpectra:
    """A_alpha spectra and energies of regular graphs."""

    @pytest.mark.parametrize("name", REGULAR)
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_shifted_spectrum(self, name, alpha):
        """Test sorted A_alpha eigenvalues are alpha*r + (1-alpha)*sorted A eigenvalues."""
        graph = generate(name)
        spec = regular_spec(graph)
        expected = alpha * spec.r + (1 - alpha) * np.asarray(spec.adjacency_eigenvalues)
        actual = sym_eigenvalues(a_alpha_matrix(graph, alpha)).as_array()
        np.testing.assert_allclose(actual, np.sort(expected), atol=1e-9)

    @pytest.mark.parametrize("name", REGULAR)
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_energy_scaling(self, name, alpha):
        """Test the A_alpha-energy of a regular graph is (1-alpha) times its energy."""
        graph = generate(name)
        assert a_alpha_energy(graph, alpha) == pytest.approx(
            (1 - alpha) * a_alpha_energy(graph, 0.0), abs=1e-9
        )

    @pytest.mark.parametrize("name", REGULAR)
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_coronal_of_regular_graph(self, name, alpha):
        """Test the coronal of a constant-row-sum matrix is n / (lam - row sum) at 20 lambdas."""
        graph = generate(name)
        r = degree_info(graph).regular_degree
        matrix = a_alpha_matrix(graph, alpha)
        rng = np.random.default_rng(7)
        for lam in rng.uniform(r + 0.5, r + 20.0, size=20):
            expected = m_coronal_regular(graph.n, float(r), float(lam))
            assert m_coronal(matrix, float(lam)) == pytest.approx(expected, rel=1e-10)


class TestTraceIdentities:
    """Trace identities over composites of the corpus."""

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize(("g1_name", "g2_name"), COMPOSITE_PAIRS)
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_eigenvalue_sum(self, kind, g1_name, g2_name, alpha):
        """Test the A_alpha eigenvalues sum to 2*alpha*m."""
        graph, _ = compose(kind, generate(g1_name), generate(g2_name))
        total = float(np.sum(sym_eigenvalues(a_alpha_matrix(graph, alpha)).as_array()))
        assert total == pytest.approx(2 * alpha * graph.m, abs=1e-8)

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize(("g1_name", "g2_name"), COMPOSITE_PAIRS)
    def test_adjacency_square_sum(self, kind, g1_name, g2_name):
        """Test the squared adjacency eigenvalues sum to 2m."""
        graph, _ = compose(kind, generate(g1_name), generate(g2_name))
        squares = float(np.sum(sym_eigenvalues(a_alpha_matrix(graph, 0.0)).as_array() ** 2))
        assert squares == pytest.approx(2 * graph.m, abs=1e-8)
