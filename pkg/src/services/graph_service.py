"""Simple-graph construction, named generators and unary graph transforms."""

import logging
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import ValidationError

from src.lib.errors import GraphValidationError
from src.models.graph import CompositeLayout, DegreeInfo, Edge, Graph, IndexRange

logger = logging.getLogger(__name__)


def from_edge_list(n: int, raw_edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph from raw vertex pairs.

    Args:
        n: Vertex count
        raw_edges: Pairs (u, v) in any orientation, duplicates allowed

    Returns:
        Graph with deduplicated edges normalized to u < v and sorted

    Raises:
        GraphValidationError: On malformed pairs, self-loops or endpoints outside [0, n)
    """
    if n < 0:
        raise GraphValidationError(f"vertex count must be non-negative, got {n}")
    pairs: List[Edge] = []
    for edge in raw_edges:
        try:
            u, v = (int(x) for x in edge)
        except (TypeError, ValueError) as e:
            raise GraphValidationError(
                f"malformed edge {edge!r}: expected two integer endpoints"
            ) from e
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        pairs.append((u, v))
    try:
        return Graph(n=n, edges=tuple(pairs))
    except ValidationError as e:
        raise GraphValidationError(str(e)) from e


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes 0..n-1 in sorted order."""
    relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    return from_edge_list(relabelled.number_of_nodes(), relabelled.edges())


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = [
        (4 * i + j, 4 * ((i + di) % 4) + (j + dj) % 4)
        for i in range(4)
        for j in range(4)
        for di, dj in steps
    ]
    return from_edge_list(16, edges)


def rook_graph(k: int) -> Graph:
    """k x k rook's graph, the Cartesian product K_k x K_k."""
    return from_networkx(nx.cartesian_product(nx.complete_graph(k), nx.complete_graph(k)))


def _cycle(k: int) -> nx.Graph:
    if k < 3:
        raise GraphValidationError(f"cycle needs k >= 3, got {k}")
    return nx.cycle_graph(k)


_FAMILIES: Dict[str, Tuple[int, Callable[..., object]]] = {
    "cycle": (1, _cycle),
    "complete": (1, nx.complete_graph),
    "path": (1, nx.path_graph),
    "empty": (1, nx.empty_graph),
    "complete_bipartite": (2, nx.complete_bipartite_graph),
    "rook": (1, rook_graph),
    "petersen": (0, nx.petersen_graph),
    "shrikhande": (0, shrikhande_graph),
}


def generate(name: str) -> Graph:
    """Generate a named graph such as ``cycle:4``, ``complete_bipartite:2:3`` or ``petersen``.

    Raises:
        GraphValidationError: Unknown family, wrong arity or invalid size
    """
    family, *params = name.strip().split(":")
    family = family.lower().replace("-", "_")
    if family not in _FAMILIES:
        raise GraphValidationError(
            f"unknown graph family {family!r}; expected one of {sorted(_FAMILIES)}"
        )
    arity, builder = _FAMILIES[family]
    if len(params) != arity:
        raise GraphValidationError(f"{family} takes {arity} parameter(s), got {len(params)}")
    try:
        sizes = [int(p) for p in params]
    except ValueError as e:
        raise GraphValidationError(f"non-integer size in {name!r}") from e
    if any(s < 1 for s in sizes):
        raise GraphValidationError(f"sizes must be >= 1 in {name!r}")

    built = builder(*sizes)
    graph = built if isinstance(built, Graph) else from_networkx(built)
    logger.debug(f"Generated {name}: n={graph.n}, m={graph.m}")
    return graph


def degree_info(graph: Graph) -> DegreeInfo:
    degrees = [0] * graph.n
    for u, v in graph.edges:
        degrees[u] += 1
        degrees[v] += 1
    regular = degrees[0] if degrees and all(d == degrees[0] for d in degrees) else None
    return DegreeInfo(degrees=tuple(degrees), regular_degree=regular)


def adjacency_matrix(graph: Graph) -> np.ndarray:
    """Integer adjacency matrix A(G)."""
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges:
        a[u, v] = a[v, u] = 1
    return a


def degree_matrix(graph: Graph) -> np.ndarray:
    """Integer diagonal degree matrix D(G)."""
    return np.diag(np.asarray(degree_info(graph).degrees, dtype=np.int64)).reshape(
        graph.n, graph.n
    )


def incidence_matrix(graph: Graph) -> np.ndarray:
    """Vertex-edge incidence matrix R(G), n x m, columns in canonical edge order."""
    r = np.zeros((graph.n, graph.m), dtype=np.int64)
    for j, (u, v) in enumerate(graph.edges):
        r[u, j] = r[v, j] = 1
    return r


def line_graph_adjacency(graph: Graph) -> np.ndarray:
    """A(L(G)) from the incidence identity R^T R = A(L(G)) + 2I."""
    r = incidence_matrix(graph)
    return r.T @ r - 2 * np.eye(graph.m, dtype=np.int64)


def _line_edges(graph: Graph) -> List[Edge]:
    """Pairs of edge indices sharing an endpoint."""
    incident: List[List[int]] = [[] for _ in range(graph.n)]
    for j, (u, v) in enumerate(graph.edges):
        incident[u].append(j)
        incident[v].append(j)
    pairs = []
    for edge_ids in incident:
        for a in range(len(edge_ids)):
            for b in range(a + 1, len(edge_ids)):
                pairs.append((edge_ids[a], edge_ids[b]))
    return pairs


def _incidence_edges(graph: Graph, offset: int) -> List[Edge]:
    """Vertex-to-edge-vertex pairs with edge-vertices starting at ``offset``."""
    pairs = []
    for j, (u, v) in enumerate(graph.edges):
        pairs.append((u, offset + j))
        pairs.append((v, offset + j))
    return pairs


def _vertex_edge_layout(graph: Graph) -> CompositeLayout:
    n, m = graph.n, graph.m
    return CompositeLayout(
        order=n + m,
        base_vertex_range=IndexRange(start=0, stop=n),
        aux_range=IndexRange(start=n, stop=n + m),
    )


def line_graph(graph: Graph) -> Graph:
    """Line graph L(G); vertex j is the j-th canonical edge of G."""
    return from_edge_list(graph.m, _line_edges(graph))


def q_graph(graph: Graph) -> Tuple[Graph, CompositeLayout]:
    """Q(G): subdivide every edge and join edge-vertices of adjacent edges."""
    n = graph.n
    edges = _incidence_edges(graph, n) + [(n + a, n + b) for a, b in _line_edges(graph)]
    return from_edge_list(n + graph.m, edges), _vertex_edge_layout(graph)


def total_graph(graph: Graph) -> Tuple[Graph, CompositeLayout]:
    """T(G): vertices V and E, adjacent when adjacent or incident in G."""
    n = graph.n
    edges = (
        list(graph.edges)
        + _incidence_edges(graph, n)
        + [(n + a, n + b) for a, b in _line_edges(graph)]
    )
    return from_edge_list(n + graph.m, edges), _vertex_edge_layout(graph)


def splitting_graph(graph: Graph) -> Tuple[Graph, CompositeLayout]:
    """Spl(G): add a twin u_i adjacent to every neighbour of v_i.

    No u_i - u_j edges are created.
    """
    n = graph.n
    edges = list(graph.edges)
    for u, v in graph.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    layout = CompositeLayout(
        order=2 * n,
        base_vertex_range=IndexRange(start=0, stop=n),
        aux_range=IndexRange(start=n, stop=2 * n),
    )
    return from_edge_list(2 * n, edges), layout
