from collections.abc import Iterator
from itertools import combinations
import logging

from src.config.config import config
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.operations import complement
from src.metrics.connectivity import is_connected
from src.utils.exceptions import SizeCapExceededError

logger = logging.getLogger(__name__)


def enumerate_labeled_graphs(
    n: int, min_degree: int = 0, connected_complement: bool = False, connected: bool = False
) -> Iterator[Graph]:
    """Every labeled graph on n vertices passing the filters, in edge-mask order."""
    if n > config.ENUMERATION_GENERAL_CAP:
        raise SizeCapExceededError("Labeled graph enumeration", n, config.ENUMERATION_GENERAL_CAP)
    pairs = [(1 << u, 1 << v, u, v) for u, v in combinations(range(n), 2)]
    logger.info(f"Enumerating {2 ** len(pairs)} labeled graphs on {n} vertices")
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        bits = mask
        while bits:
            low = bits & -bits
            u_bit, v_bit, u, v = pairs[low.bit_length() - 1]
            rows[u] |= v_bit
            rows[v] |= u_bit
            bits ^= low
        if min_degree and any(row.bit_count() < min_degree for row in rows):
            continue
        g = Graph(n=n, rows=tuple(rows))
        if connected and not is_connected(g):
            continue
        if connected_complement and not is_connected(complement(g)):
            continue
        yield g


def _biadjacency_masks(cells: int, min_edges: int) -> Iterator[int]:
    full = (1 << cells) - 1
    if 2 * min_edges > cells:
        # dense corpora: walk the sets of missing cells instead
        for missing in range(cells - min_edges + 1):
            for chosen in combinations(range(cells), missing):
                hole = 0
                for cell in chosen:
                    hole |= 1 << cell
                yield full ^ hole
        return
    for mask in range(1 << cells):
        if mask.bit_count() >= min_edges:
            yield mask


def enumerate_bipartite_graphs(
    a: int, b: int, min_degree: int = 0, min_edges: int = 0, connected_quasi_complement: bool = False
) -> Iterator[BipartiteGraph]:
    """Every labeled bipartite graph with parts X = 0..a-1 and Y = a..a+b-1 passing the filters."""
    cells = a * b
    if cells > config.ENUMERATION_BIPARTITE_CAP:
        raise SizeCapExceededError("Bipartite enumeration", cells, config.ENUMERATION_BIPARTITE_CAP)
    row_masks = [((1 << b) - 1) << (i * b) for i in range(a)]
    column_masks = [sum(1 << (i * b + j) for i in range(a)) for j in range(b)]
    full = (1 << cells) - 1
    logger.info(f"Enumerating bipartite graphs with parts ({a}, {b}) and at least {min_edges} edges")
    for mask in _biadjacency_masks(cells, min_edges):
        if min_degree and (
            any((mask & m).bit_count() < min_degree for m in row_masks)
            or any((mask & m).bit_count() < min_degree for m in column_masks)
        ):
            continue
        if connected_quasi_complement and not is_connected(BipartiteGraph.from_biadjacency(a, b, full ^ mask).graph):
            continue
        yield BipartiteGraph.from_biadjacency(a, b, mask)
