from itertools import combinations
import logging
from typing import Literal

import networkx as nx

from src.constants import EXHAUSTIVE_CONNECTIVITY_MAX_N
from src.graphs.graph import Graph
from src.utils.exceptions import EmptyGraphError

logger = logging.getLogger(__name__)

ConnectivityMethod = Literal["auto", "flow", "exhaustive"]


def _reaches_all(rows: tuple[int, ...], alive: int) -> bool:
    """Whether the subgraph induced by the `alive` bitset is connected (alive != 0)."""
    seen = alive & -alive
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def is_connected(g: Graph) -> bool:
    return g.n > 0 and _reaches_all(g.rows, g.full_mask)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("Minimum degree is undefined on the graph with no vertices")
    return min(g.degrees())


def edge_count(g: Graph) -> int:
    return g.edge_count


def _exhaustive_connectivity(g: Graph) -> int:
    full = g.full_mask
    for size in range(g.n - 1):
        for removed in combinations(range(g.n), size):
            alive = full
            for v in removed:
                alive &= ~(1 << v)
            if not _reaches_all(g.rows, alive):
                return size
    return g.n - 1


def vertex_connectivity(g: Graph, method: ConnectivityMethod = "auto") -> int:
    """κ(G), with κ(K_n) = n - 1 and κ = 0 for disconnected graphs."""
    if g.n <= 1:
        return 0
    if method == "exhaustive" or (method == "auto" and g.n <= EXHAUSTIVE_CONNECTIVITY_MAX_N):
        return _exhaustive_connectivity(g)
    if not is_connected(g):
        return 0
    return int(nx.node_connectivity(g.to_networkx()))


def is_k_connected(g: Graph, k: int, method: ConnectivityMethod = "auto") -> bool:
    return g.n > k and vertex_connectivity(g, method) >= k
