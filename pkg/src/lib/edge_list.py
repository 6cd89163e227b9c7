"""Edge-list text format: header "n m", then m lines "u v"; '#' starts a comment."""

import logging
from pathlib import Path
from typing import Union

from src.lib.errors import GraphValidationError
from src.models.graph import Graph
from src.services.graph_service import from_edge_list

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a canonical graph.

    Args:
        text: File contents

    Returns:
        Canonical graph

    Raises:
        GraphValidationError: If the header or an edge line is malformed
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphValidationError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as e:
            raise GraphValidationError(f"line {lineno}: non-integer token in {raw!r}") from e

    if not rows:
        raise GraphValidationError("edge list is empty: missing 'n m' header")

    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphValidationError(f"header announces {m} edges but {len(edges)} were given")

    return from_edge_list(n, edges)


def format_edge_list(graph: Graph) -> str:
    """Render a graph in the edge-list format (canonical edge order)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, Path]) -> Graph:
    """Read an edge-list file.

    Raises:
        OSError: If the file cannot be read
        GraphValidationError: If its contents are malformed
    """
    text = Path(path).read_text(encoding="utf-8")
    graph = parse_edge_list(text)
    logger.debug(f"Read graph with n={graph.n}, m={graph.m} from {path}")
    return graph


def write_edge_list(graph: Graph, path: Union[str, Path]) -> None:
    """Write a graph to an edge-list file."""
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")
    logger.debug(f"Wrote graph with n={graph.n}, m={graph.m} to {path}")
