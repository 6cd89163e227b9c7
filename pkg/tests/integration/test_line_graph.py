"""Integration tests for the line-graph spectrum of regular graphs."""

import numpy as np
import pytest

from src.services.graph_service import generate, line_graph, line_graph_adjacency
from src.services.spectra_service import (
    a_alpha_matrix,
    line_graph_spectrum_regular,
    regular_spec,
    sym_eigenvalues,
)


class TestLineGraphTheorem:
    """Predicted line-graph spectra against the oracle on constructed line graphs."""

    @pytest.mark.parametrize(
        "name", ["cycle:4", "complete:4", "petersen", "complete:2", "complete_bipartite:3:3"]
    )
    def test_prediction_matches_oracle(self, name):
        """Test lambda + r - 2 and -2 (m - n times) against L(G)."""
        graph = generate(name)
        spec = regular_spec(graph)
        predicted = line_graph_spectrum_regular(
            spec.adjacency_eigenvalues, graph.n, graph.m, spec.r
        )
        oracle = sym_eigenvalues(a_alpha_matrix(line_graph(graph), 0.0))
        np.testing.assert_allclose(predicted.as_array(), oracle.as_array(), atol=1e-8)

    @pytest.mark.parametrize("name", ["cycle:5", "petersen", "path:4"])
    def test_incidence_route_agrees_with_construction(self, name):
        """Test R^T R - 2I is the adjacency matrix of the constructed line graph."""
        graph = generate(name)
        from_incidence = line_graph_adjacency(graph)
        constructed = a_alpha_matrix(line_graph(graph), 0.0).entries
        np.testing.assert_array_equal(from_incidence, constructed.astype(np.int64))

    def test_petersen_line_graph_spectrum(self, petersen):
        """Test L(petersen) has spectrum {4, 2^5, -1^4, -2^5}."""
        spec = regular_spec(petersen)
        predicted = line_graph_spectrum_regular(spec.adjacency_eigenvalues, 10, 15, 3)
        expected = [-2.0] * 5 + [-1.0] * 4 + [2.0] * 5 + [4.0]
        np.testing.assert_allclose(predicted.as_array(), expected, atol=1e-9)
