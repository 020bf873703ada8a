import logging

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.named import complete_bipartite_graph, complete_graph, empty_bipartite_graph, empty_graph
from src.graphs.operations import bipartite_disjoint_union, bipartite_join, disjoint_union, join
from src.models.enums.family import Family
from src.models.family import FamilyParams
from src.utils.exceptions import FamilyRangeError

logger = logging.getLogger(__name__)

# family -> c such that valid k satisfy 1 <= k and 2k <= n - c
_RANGE_SLACK = {
    Family.B: 0,
    Family.C: 0,
    Family.R: 0,
    Family.Q: 0,
    Family.L: 1,
    Family.N: 1,
    Family.L_UNDER: 2,
    Family.N_UNDER: 2,
}


def family_range(family: Family, n: int) -> range:
    """Valid k for family_n^k."""
    return range(1, (n - _RANGE_SLACK[family]) // 2 + 1)


def family_order(family: Family, n: int) -> int:
    match family:
        case Family.B | Family.R | Family.Q:
            return 2 * n
        case Family.C:
            return 2 * n - 1
        case _:
            return n


def validate_family_params(p: FamilyParams) -> None:
    if p.k not in family_range(p.family, p.n):
        slack = _RANGE_SLACK[p.family]
        bound = "n/2" if slack == 0 else f"(n-{slack})/2"
        raise FamilyRangeError(f"{p.label()}: k must satisfy 1 <= k <= {bound}")


def generate_family(p: FamilyParams) -> Graph | BipartiteGraph:
    validate_family_params(p)
    n, k = p.n, p.k
    logger.debug(f"Generating {p.label()}")
    match p.family:
        case Family.B:
            return bipartite_join(empty_bipartite_graph(k, n - k), complete_bipartite_graph(n - k, k))
        case Family.C:
            # parts come out as (n-1, n); store the larger one as X
            return bipartite_join(empty_bipartite_graph(k, n - k), complete_bipartite_graph(n - k - 1, k)).oriented()
        case Family.R:
            return bipartite_disjoint_union(complete_bipartite_graph(k, k), complete_bipartite_graph(n - k, n - k))
        case Family.Q:
            return bipartite_join(empty_bipartite_graph(k + 1, n - k), complete_bipartite_graph(n - k - 1, k))
        case Family.L:
            return join(complete_graph(1), disjoint_union(complete_graph(k), complete_graph(n - k - 1)))
        case Family.N:
            return join(complete_graph(k), disjoint_union(complete_graph(n - 2 * k), empty_graph(k)))
        case Family.L_UNDER:
            return disjoint_union(complete_graph(k + 1), complete_graph(n - k - 1))
        case Family.N_UNDER:
            return join(complete_graph(k), disjoint_union(complete_graph(n - 2 * k - 1), empty_graph(k + 1)))
