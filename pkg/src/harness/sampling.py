from collections.abc import Iterator
import logging

import numpy as np

from src.config.config import config
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.models.enums.corpus_kind import SamplingModel
from src.utils.exceptions import UnsatisfiableFilterError

logger = logging.getLogger(__name__)


def _random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    adjacency = upper | upper.T
    rows = tuple(int(sum(1 << int(v) for v in np.flatnonzero(adjacency[u]))) for u in range(n))
    return Graph(n=n, rows=rows)


def _random_bipartite_graph(rng: np.random.Generator, a: int, b: int, p: float) -> BipartiteGraph:
    cells = np.flatnonzero(rng.random(a * b) < p)
    return BipartiteGraph.from_biadjacency(a, b, sum(1 << int(c) for c in cells))


def _min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def sample_random_graphs(
    n: int,
    count: int,
    model: SamplingModel = SamplingModel.UNIFORM_EDGE_P,
    seed: int = 0,
    p: float = 0.5,
    min_degree: int = 0,
    n_max: int | None = None,
    retry_budget: int | None = None,
) -> Iterator[Graph]:
    """Seeded G(n, p) samples; the fixed-min-degree model rejects samples below min_degree.

    With n_max the order of each sample is drawn uniformly from [n, n_max].
    """
    rng = np.random.default_rng(seed)
    budget = config.SAMPLING_RETRY_BUDGET if retry_budget is None else retry_budget
    for _ in range(count):
        order = n if n_max is None else int(rng.integers(n, n_max + 1))
        for _attempt in range(budget):
            g = _random_graph(rng, order, p)
            if model is SamplingModel.UNIFORM_EDGE_P or _min_degree(g) >= min_degree:
                yield g
                break
        else:
            raise UnsatisfiableFilterError(
                f"No sample on {order} vertices with p={p} reached minimum degree {min_degree} in {budget} attempts"
            )


def sample_random_bipartite_graphs(
    a: int,
    b: int,
    count: int,
    p: float = 0.5,
    seed: int = 0,
    min_degree: int = 0,
    retry_budget: int | None = None,
) -> Iterator[BipartiteGraph]:
    rng = np.random.default_rng(seed)
    budget = config.SAMPLING_RETRY_BUDGET if retry_budget is None else retry_budget
    for _ in range(count):
        for _attempt in range(budget):
            g = _random_bipartite_graph(rng, a, b, p)
            if _min_degree(g.graph) >= min_degree:
                yield g
                break
        else:
            raise UnsatisfiableFilterError(
                f"No bipartite sample with parts ({a}, {b}) reached minimum degree {min_degree} in {budget} attempts"
            )
