from dataclasses import dataclass
import logging

import numpy as np
import numpy.typing as npt
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from src.constants import SPARSE_APSP_MIN_N, UNREACHABLE
from src.graphs.graph import Graph
from src.utils.exceptions import DisconnectedGraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class DistanceMatrix:
    """Hop distances; pairs in different components hold UNREACHABLE."""

    n: int
    d: npt.NDArray[np.int64]

    def distance(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def row(self, v: int) -> list[int]:
        return [int(x) for x in self.d[v]]

    @property
    def is_connected(self) -> bool:
        return self.n > 0 and not bool((self.d == UNREACHABLE).any())

    def eccentricity(self, v: int) -> int:
        if not self.is_connected:
            raise DisconnectedGraphError("Eccentricity is undefined on a disconnected graph")
        return int(self.d[v].max())

    def diameter(self) -> int:
        if not self.is_connected:
            raise DisconnectedGraphError("Diameter is undefined on a disconnected graph")
        return int(self.d.max()) if self.n else 0


def single_source_distances(g: Graph, source: int) -> list[int]:
    """Level-synchronous BFS over adjacency bitsets."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    rows = g.rows
    while frontier:
        level += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        while nxt:
            low = nxt & -nxt
            dist[low.bit_length() - 1] = level
            nxt ^= low
    return dist


def _sparse_distances(g: Graph) -> npt.NDArray[np.int64]:
    edges = g.edges()
    sources = [u for u, _ in edges]
    targets = [v for _, v in edges]
    adjacency = csr_matrix((np.ones(len(edges), dtype=np.int8), (sources, targets)), shape=(g.n, g.n))
    raw = shortest_path(adjacency, method="D", directed=False, unweighted=True)
    return np.where(np.isinf(raw), UNREACHABLE, raw).astype(np.int64)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.n >= SPARSE_APSP_MIN_N:
        logger.debug(f"Sparse all-pairs shortest paths on {g.n} vertices")
        return DistanceMatrix(n=g.n, d=_sparse_distances(g))
    d = np.array([single_source_distances(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    return DistanceMatrix(n=g.n, d=d)
