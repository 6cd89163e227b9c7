"""Construction of the eight corona-type composites and their degree bookkeeping."""

import logging
from collections import Counter
from typing import List, Tuple, Union

from src.lib.errors import GraphValidationError, RegularityError
from src.models.graph import CompositeLayout, CoronaKind, Graph, IndexRange
from src.services.graph_service import (
    degree_info,
    from_edge_list,
    q_graph,
    splitting_graph,
    total_graph,
)
from src.services.spectra_service import AlphaLike, a_alpha_energy

logger = logging.getLogger(__name__)

KindLike = Union[CoronaKind, str]

_SPLITTING_KINDS = (
    CoronaKind.SPLITTING,
    CoronaKind.SPLITTING_ADD_VERTEX,
    CoronaKind.SPLITTING_NEIGHBOURHOOD,
)


def _kind(kind: KindLike) -> CoronaKind:
    return kind if isinstance(kind, CoronaKind) else CoronaKind.parse(kind)


def copy_count(kind: KindLike, n1: int, m1: int) -> int:
    """Number of G2 copies: one per edge for Q-edge, one per vertex otherwise."""
    return m1 if _kind(kind) is CoronaKind.Q_EDGE else n1


def composite_order(kind: KindLike, n1: int, m1: int, n2: int) -> int:
    kind = _kind(kind)
    if kind in (CoronaKind.CORONA, CoronaKind.NEIGHBOURHOOD):
        core = n1
    elif kind in _SPLITTING_KINDS:
        core = 2 * n1
    else:
        core = n1 + m1
    return core + copy_count(kind, n1, m1) * n2


def _core(kind: CoronaKind, g1: Graph) -> Tuple[Graph, CompositeLayout]:
    if kind is CoronaKind.TOTAL:
        return total_graph(g1)
    if kind in (CoronaKind.Q_VERTEX, CoronaKind.Q_EDGE):
        return q_graph(g1)
    if kind in _SPLITTING_KINDS:
        return splitting_graph(g1)
    layout = CompositeLayout(
        order=g1.n,
        base_vertex_range=IndexRange(start=0, stop=g1.n),
        aux_range=IndexRange(start=g1.n, stop=g1.n),
    )
    return g1, layout


def _anchors(kind: CoronaKind, g1: Graph) -> List[List[int]]:
    """Core vertices joined to every vertex of copy i, for each i."""
    n1 = g1.n
    if kind in (CoronaKind.NEIGHBOURHOOD, CoronaKind.SPLITTING_NEIGHBOURHOOD):
        neighbours: List[List[int]] = [[] for _ in range(n1)]
        for u, v in g1.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return neighbours
    if kind is CoronaKind.SPLITTING_ADD_VERTEX:
        return [[n1 + i] for i in range(n1)]
    if kind is CoronaKind.Q_EDGE:
        return [[n1 + j] for j in range(g1.m)]
    return [[i] for i in range(n1)]


def compose(kind: KindLike, g1: Graph, g2: Graph) -> Tuple[Graph, CompositeLayout]:
    """Build the composite G1 (kind) G2 with layout [V(G1) | aux | copies].

    Copy i occupies [offset + i*n2, offset + (i+1)*n2) with G2's own labelling.

    Raises:
        GraphValidationError: Empty G1, or an edgeless G1 for total and Q kinds
    """
    kind = _kind(kind)
    if g1.n == 0:
        raise GraphValidationError("G1 must have at least one vertex")
    if kind.needs_edges and g1.m == 0:
        raise GraphValidationError(f"{kind.value} corona needs G1 with at least one edge")

    core, core_layout = _core(kind, g1)
    anchors = _anchors(kind, g1)
    n2 = g2.n
    offset = core.n

    edges = list(core.edges)
    copy_ranges = []
    for i, anchor_set in enumerate(anchors):
        start = offset + i * n2
        copy_ranges.append(IndexRange(start=start, stop=start + n2))
        edges.extend((start + u, start + v) for u, v in g2.edges)
        edges.extend((a, start + x) for a in anchor_set for x in range(n2))

    order = offset + len(anchors) * n2
    graph = from_edge_list(order, edges)
    layout = CompositeLayout(
        order=order,
        base_vertex_range=core_layout.base_vertex_range,
        aux_range=core_layout.aux_range,
        copy_ranges=tuple(copy_ranges),
    )
    logger.info(
        f"Composed {kind.value} ({kind.symbol}): n1={g1.n}, n2={n2}, "
        f"order={graph.n}, edges={graph.m}"
    )
    return graph, layout


def degrees_of_composite(kind: KindLike, g1: Graph, g2: Graph) -> Tuple[int, ...]:
    """Closed-form degree multiset (sorted ascending) of a composite of regular graphs.

    Raises:
        RegularityError: If G1 or G2 is not regular
    """
    kind = _kind(kind)
    info1, info2 = degree_info(g1), degree_info(g2)
    if not (info1.is_regular and info2.is_regular):
        raise RegularityError("degree bookkeeping needs regular G1 and G2")
    r1, r2 = info1.regular_degree, info2.regular_degree
    n1, m1, n2 = g1.n, g1.m, g2.n

    copies = copy_count(kind, n1, m1) * n2
    blocks = {
        CoronaKind.CORONA: [(r1 + n2, n1), (r2 + 1, copies)],
        CoronaKind.NEIGHBOURHOOD: [(r1 + r1 * n2, n1), (r2 + r1, copies)],
        CoronaKind.TOTAL: [(2 * r1 + n2, n1), (2 * r1, m1), (r2 + 1, copies)],
        CoronaKind.SPLITTING: [(2 * r1 + n2, n1), (r1, n1), (r2 + 1, copies)],
        CoronaKind.SPLITTING_ADD_VERTEX: [(2 * r1, n1), (r1 + n2, n1), (r2 + 1, copies)],
        CoronaKind.SPLITTING_NEIGHBOURHOOD: [
            ((2 + n2) * r1, n1),
            (r1, n1),
            (r2 + r1, copies),
        ],
        CoronaKind.Q_VERTEX: [(r1 + n2, n1), (2 * r1, m1), (r2 + 1, copies)],
        CoronaKind.Q_EDGE: [(r1, n1), (2 * r1 + n2, m1), (r2 + 1, copies)],
    }[kind]
    counts = Counter()
    for degree, multiplicity in blocks:
        counts[degree] += multiplicity
    return tuple(sorted(counts.elements()))


def composite_energy(kind: KindLike, g1: Graph, g2: Graph, alpha: AlphaLike) -> float:
    """A_alpha-energy of the composite G1 (kind) G2."""
    graph, _ = compose(kind, g1, g2)
    return a_alpha_energy(graph, alpha)
