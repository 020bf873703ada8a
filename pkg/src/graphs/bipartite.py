from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.graphs.graph import Graph, build_graph
from src.utils.bitsets import iter_bits, mask_of
from src.utils.exceptions import InvalidGraphError


@dataclass(frozen=True, slots=True)
class BipartiteGraph:
    """A graph with a fixed, ordered bipartition (X, Y).

    Parts are never recomputed from the edges: O_{a,b} and O_{b,a} are different
    bipartite graphs unless a == b.
    """

    graph: Graph
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        x_mask = mask_of(self.x)
        y_mask = mask_of(self.y)
        if x_mask & y_mask:
            raise InvalidGraphError("Parts X and Y must be disjoint")
        if len(self.x) + len(self.y) != self.graph.n or (x_mask | y_mask) != self.graph.full_mask:
            raise InvalidGraphError("Parts X and Y must cover every vertex exactly once")
        for v in self.x:
            if self.graph.rows[v] & x_mask:
                raise InvalidGraphError(f"Vertex {v} has a neighbour inside its own part X")
        for v in self.y:
            if self.graph.rows[v] & y_mask:
                raise InvalidGraphError(f"Vertex {v} has a neighbour inside its own part Y")

    @classmethod
    def from_parts(cls, x: Sequence[int], y: Sequence[int], edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        return cls(graph=build_graph(len(x) + len(y), edges), x=tuple(x), y=tuple(y))

    @classmethod
    def from_graph(cls, graph: Graph, x: Iterable[int]) -> "BipartiteGraph":
        """Fix the parts of an existing graph: X as given, Y the remaining vertices."""
        chosen = sorted(set(x))
        in_x = set(chosen)
        return cls(graph=graph, x=tuple(chosen), y=tuple(v for v in range(graph.n) if v not in in_x))

    @classmethod
    def from_biadjacency(cls, a: int, b: int, mask: int) -> "BipartiteGraph":
        """X = 0..a-1, Y = a..a+b-1; bit i*b + j of `mask` is the edge x_i y_j."""
        rows = [0] * (a + b)
        for cell in iter_bits(mask):
            i, j = divmod(cell, b)
            rows[i] |= 1 << (a + j)
            rows[a + j] |= 1 << i
        return cls(graph=Graph(n=a + b, rows=tuple(rows)), x=tuple(range(a)), y=tuple(range(a, a + b)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def x_mask(self) -> int:
        return mask_of(self.x)

    @property
    def y_mask(self) -> int:
        return mask_of(self.y)

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def part_sizes(self) -> tuple[int, int]:
        return len(self.x), len(self.y)

    def is_balanced(self) -> bool:
        return len(self.x) == len(self.y)

    def is_nearly_balanced(self) -> bool:
        return len(self.x) == len(self.y) + 1

    def swap_parts(self) -> "BipartiteGraph":
        return BipartiteGraph(graph=self.graph, x=self.y, y=self.x)

    def oriented(self) -> "BipartiteGraph":
        """Same graph with the larger part stored as X."""
        return self.swap_parts() if len(self.y) > len(self.x) else self

    def with_edge(self, u: int, v: int) -> "BipartiteGraph":
        return BipartiteGraph(graph=self.graph.with_edge(u, v), x=self.x, y=self.y)

    def without_edge(self, u: int, v: int) -> "BipartiteGraph":
        return BipartiteGraph(graph=self.graph.without_edge(u, v), x=self.x, y=self.y)
