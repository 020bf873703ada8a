from fractions import Fraction
from functools import cached_property

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.operations import complement, quasi_complement
from src.metrics.connectivity import is_connected, min_degree, vertex_connectivity
from src.metrics.indices import index_values
from src.models.enums.measure import ComplementKind, Measure

IndexValues = tuple[int, int, Fraction]


class GraphFacts:
    """Lazily computed quantities of one graph, shared by every entry evaluated on it."""

    def __init__(self, g: Graph | BipartiteGraph) -> None:
        self.source = g
        self.bipartite = g if isinstance(g, BipartiteGraph) else None
        self.graph = g.graph if isinstance(g, BipartiteGraph) else g

    @cached_property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @cached_property
    def min_degree(self) -> int:
        return min_degree(self.graph)

    @cached_property
    def vertex_connectivity(self) -> int:
        return vertex_connectivity(self.graph)

    def is_k_connected(self, k: int) -> bool:
        return self.graph.n > k and self.vertex_connectivity >= k

    @cached_property
    def complement(self) -> Graph:
        return complement(self.graph)

    @cached_property
    def quasi_complement(self) -> BipartiteGraph | None:
        return quasi_complement(self.bipartite) if self.bipartite is not None else None

    @cached_property
    def complement_values(self) -> IndexValues | None:
        return index_values(self.complement) if is_connected(self.complement) else None

    @cached_property
    def quasi_complement_values(self) -> IndexValues | None:
        quasi = self.quasi_complement
        if quasi is None or not is_connected(quasi.graph):
            return None
        return index_values(quasi.graph)

    def measure_value(self, measure: Measure, kind: ComplementKind) -> Fraction | None:
        """Value of the measure, None when the complement it is taken on is disconnected or absent."""
        if measure is Measure.EDGE_COUNT:
            return Fraction(self.edge_count)
        values = self.quasi_complement_values if kind is ComplementKind.QUASI_COMPLEMENT else self.complement_values
        if values is None:
            return None
        wiener, hyper_wiener, harary = values
        match measure:
            case Measure.WIENER:
                return Fraction(wiener)
            case Measure.HYPER_WIENER:
                return Fraction(hyper_wiener)
            case _:
                return harary
