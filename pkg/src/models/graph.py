"""Graph, degree and composite-layout data models."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Edge = Tuple[int, int]


class Graph(BaseModel):
    """Simple undirected graph with a canonical, sorted edge list.

    Edge ``j`` of the sorted list is the j-th edge everywhere downstream
    (incidence columns, edge-vertices of Q and total graphs, Q-edge copies).
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    edges: Tuple[Edge, ...] = Field(default=(), description="Edges (u, v) with u < v, sorted")

    @field_validator("edges")
    @classmethod
    def canonicalize_edges(cls, v: Tuple[Edge, ...]) -> Tuple[Edge, ...]:
        """Normalize every pair to u < v, drop duplicates and sort."""
        canonical = set()
        for u, w in v:
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or w < 0:
                raise ValueError(f"negative endpoint in edge ({u}, {w})")
            canonical.add((min(u, w), max(u, w)))
        return tuple(sorted(canonical))

    @model_validator(mode="after")
    def check_endpoints(self) -> "Graph":
        for u, w in self.edges:
            if w >= self.n:
                raise ValueError(f"edge ({u}, {w}) has an endpoint >= n={self.n}")
        return self

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)


class DegreeInfo(BaseModel):
    """Vertex degrees and, for regular graphs, the common degree."""

    model_config = ConfigDict(frozen=True)

    degrees: Tuple[int, ...]
    regular_degree: Optional[int] = None

    @model_validator(mode="after")
    def check_regularity(self) -> "DegreeInfo":
        if self.regular_degree is not None and any(
            d != self.regular_degree for d in self.degrees
        ):
            raise ValueError("regular_degree set but degrees differ")
        return self

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None


class CoronaKind(str, Enum):
    """The eight corona-type products."""

    CORONA = "corona"
    NEIGHBOURHOOD = "neighbourhood"
    TOTAL = "total"
    SPLITTING = "splitting"
    SPLITTING_ADD_VERTEX = "splitting_add_vertex"
    SPLITTING_NEIGHBOURHOOD = "splitting_neighbourhood"
    Q_VERTEX = "q_vertex"
    Q_EDGE = "q_edge"

    @classmethod
    def parse(cls, raw: str) -> "CoronaKind":
        """Accept CLI spellings such as ``q-vertex``."""
        return cls(raw.strip().lower().replace("-", "_"))

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def has_closed_form(self) -> bool:
        return self in CLOSED_FORM_KINDS

    @property
    def needs_edges(self) -> bool:
        return self in (CoronaKind.TOTAL, CoronaKind.Q_VERTEX, CoronaKind.Q_EDGE)


_SYMBOLS = {
    CoronaKind.CORONA: "∘",
    CoronaKind.NEIGHBOURHOOD: "⋆",
    CoronaKind.TOTAL: "⊛",
    CoronaKind.SPLITTING: "⊞",
    CoronaKind.SPLITTING_ADD_VERTEX: "⊠",
    CoronaKind.SPLITTING_NEIGHBOURHOOD: "⋇",
    CoronaKind.Q_VERTEX: "⊔·",
    CoronaKind.Q_EDGE: "⊔+",
}

CLOSED_FORM_KINDS = frozenset(
    {
        CoronaKind.TOTAL,
        CoronaKind.SPLITTING,
        CoronaKind.SPLITTING_ADD_VERTEX,
        CoronaKind.SPLITTING_NEIGHBOURHOOD,
        CoronaKind.Q_VERTEX,
        CoronaKind.Q_EDGE,
    }
)


class IndexRange(BaseModel):
    """Half-open vertex index interval [start, stop)."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=0)
    stop: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_order(self) -> "IndexRange":
        if self.stop < self.start:
            raise ValueError(f"range stop {self.stop} precedes start {self.start}")
        return self

    @property
    def width(self) -> int:
        return self.stop - self.start

    def indices(self) -> range:
        return range(self.start, self.stop)

    def __contains__(self, index: int) -> bool:
        return self.start <= index < self.stop


class CompositeLayout(BaseModel):
    """Canonical vertex ordering of a composite: [V(G1) | aux | copies...]."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Vertex count of the composite")
    base_vertex_range: IndexRange
    aux_range: IndexRange
    copy_ranges: Tuple[IndexRange, ...] = ()

    @model_validator(mode="after")
    def check_partition(self) -> "CompositeLayout":
        ranges = [self.base_vertex_range, self.aux_range, *self.copy_ranges]
        cursor = 0
        for r in ranges:
            if r.start != cursor:
                raise ValueError(f"layout ranges are not contiguous at index {cursor}")
            cursor = r.stop
        if cursor != self.order:
            raise ValueError(f"layout covers [0, {cursor}) but order is {self.order}")
        widths = {r.width for r in self.copy_ranges}
        if len(widths) > 1:
            raise ValueError("copy ranges must share one width")
        return self

    @property
    def copy_width(self) -> int:
        return self.copy_ranges[0].width if self.copy_ranges else 0
