from fractions import Fraction
import logging
from math import lcm

import numpy as np
import numpy.typing as npt

from src.graphs.graph import Graph
from src.metrics.distances import DistanceMatrix, all_pairs_distances
from src.models.enums.measure import Measure
from src.models.index_report import IndexReport
from src.utils.exceptions import DisconnectedGraphError, EmptyGraphError

logger = logging.getLogger(__name__)

# Largest value the int64 reciprocal-weight path may reach before falling back to Python ints
_INT64_HEADROOM = 2**62


def _connected_distances(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        raise EmptyGraphError("Indices are undefined on the graph with no vertices")
    dm = all_pairs_distances(g)
    if not dm.is_connected:
        raise DisconnectedGraphError(f"Indices are undefined on a disconnected graph of order {g.n}")
    return dm


def _pair_distances(dm: DistanceMatrix) -> npt.NDArray[np.int64]:
    return dm.d[np.triu_indices(dm.n, 1)]


def _harary_from_pairs(pairs: npt.NDArray[np.int64]) -> Fraction:
    counts = np.bincount(pairs) if pairs.size else np.zeros(1, dtype=np.int64)
    return sum((Fraction(int(c), d) for d, c in enumerate(counts) if d > 0 and c), Fraction(0))


def index_values(g: Graph) -> tuple[int, int, Fraction]:
    """(W, WW, H) without per-vertex transmissions."""
    pairs = _pair_distances(_connected_distances(g))
    wiener = int(pairs.sum())
    squares = int((pairs * pairs).sum())
    return wiener, (wiener + squares) // 2, _harary_from_pairs(pairs)


def index_value(g: Graph, measure: Measure) -> Fraction:
    wiener, hyper_wiener, harary = index_values(g)
    match measure:
        case Measure.WIENER:
            return Fraction(wiener)
        case Measure.HYPER_WIENER:
            return Fraction(hyper_wiener)
        case Measure.HARARY:
            return harary
        case Measure.EDGE_COUNT:
            return Fraction(g.edge_count)


def _reciprocal_transmissions(dm: DistanceMatrix) -> list[Fraction]:
    diameter = dm.diameter()
    if diameter == 0:
        return [Fraction(0)] * dm.n
    common = lcm(*range(1, diameter + 1))
    weights = [0] + [common // d for d in range(1, diameter + 1)]
    if common * dm.n < _INT64_HEADROOM:
        numerators = np.asarray(weights, dtype=np.int64)[dm.d].sum(axis=1)
    else:
        numerators = np.asarray(weights, dtype=object)[dm.d].sum(axis=1)
    return [Fraction(int(x), common) for x in numerators]


def indices(g: Graph) -> IndexReport:
    dm = _connected_distances(g)
    pairs = _pair_distances(dm)
    wiener = int(pairs.sum())
    squares = int((pairs * pairs).sum())
    if (wiener + squares) % 2:
        raise ArithmeticError("Sum of d + d^2 over vertex pairs must be even")
    logger.debug(f"Indices computed for a graph of order {g.n}")
    return IndexReport(
        n=g.n,
        connected=True,
        wiener=wiener,
        hyper_wiener=(wiener + squares) // 2,
        harary=_harary_from_pairs(pairs),
        transmissions=[int(x) for x in dm.d.sum(axis=1)],
        squared_transmissions=[int(x) for x in (dm.d * dm.d).sum(axis=1)],
        reciprocal_transmissions=_reciprocal_transmissions(dm),
    )


def without_isolated_vertices(g: Graph) -> Graph:
    return g.induced_subgraph(g.non_isolated_vertices())


def indices_without_isolated(g: Graph) -> IndexReport:
    return indices(without_isolated_vertices(g))
