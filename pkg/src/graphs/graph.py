from collections.abc import Iterable, Sequence
from dataclasses import dataclass
import logging

import networkx as nx

from src.utils.bitsets import iter_bits, mask_of
from src.utils.exceptions import InvalidGraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 stored as one adjacency bitset per vertex.

    Instances are immutable values; every operator returns a new graph. The rows are
    trusted to be symmetric and loop-free, use `build_graph` or `Graph.from_rows` for
    untrusted input.
    """

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidGraphError(f"Row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise InvalidGraphError(f"Loop edge at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise InvalidGraphError(f"Adjacency is not symmetric for pair ({v}, {u})")
        return cls(n=n, rows=tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row >> (u + 1) << (u + 1))]

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidGraphError(f"Loop edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(n=self.n, rows=tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(n=self.n, rows=tuple(rows))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by `vertices`, relabelled 0..len-1 in the given order."""
        position = {v: i for i, v in enumerate(vertices)}
        keep = mask_of(vertices)
        rows = []
        for v in vertices:
            rows.append(mask_of(position[u] for u in iter_bits(self.rows[v] & keep)))
        return Graph(n=len(vertices), rows=tuple(rows))

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Vertex v of this graph becomes vertex permutation[v]."""
        if sorted(permutation) != list(range(self.n)):
            raise InvalidGraphError("Relabelling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[permutation[v]] = mask_of(permutation[u] for u in iter_bits(row))
        return Graph(n=self.n, rows=tuple(rows))

    def non_isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.rows) if row]

    def two_coloring(self) -> tuple[int, int] | None:
        """Bitmasks of a proper 2-colouring, or None when the graph has an odd cycle."""
        color_a = 0
        color_b = 0
        unseen = self.full_mask
        while unseen:
            start = unseen & -unseen
            frontier = start
            color_a |= start
            side_a = True
            seen = start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                own = color_a if side_a else color_b
                if nxt & own:
                    return None
                nxt &= ~seen
                if side_a:
                    color_b |= nxt
                else:
                    color_a |= nxt
                seen |= nxt
                frontier = nxt
                side_a = not side_a
            unseen &= ~seen
        return color_a, color_b

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = list(graph.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        return build_graph(len(nodes), [(position[u], position[v]) for u, v in graph.edges()])


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidGraphError(f"Vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"Edge ({u}, {v}) has an index outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"Loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, rows=tuple(rows))
