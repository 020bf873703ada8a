from collections.abc import Iterator
from itertools import combinations
import logging

from src.config.config import config
from src.graphs.bipartite import BipartiteGraph
from src.graphs.families import family_order, validate_family_params
from src.graphs.graph import Graph
from src.models.enums.family import Family
from src.models.family import FamilyParams
from src.utils.bitsets import iter_bits, mask_of
from src.utils.exceptions import ClassMismatchError, SizeCapExceededError

logger = logging.getLogger(__name__)


def _component_sizes(rows: tuple[int, ...], alive: int) -> list[int]:
    sizes = []
    unseen = alive
    while unseen:
        seen = unseen & -unseen
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        sizes.append(seen.bit_count())
        unseen &= ~seen
    return sizes


def _splits(sizes: list[int], target: int) -> bool:
    """Whether some sub-multiset of component sizes sums to target."""
    reachable = 1
    for size in sizes:
        reachable |= reachable << size
    return bool(reachable >> target & 1)


def _small_neighbourhood(rows: tuple[int, ...], side: tuple[int, ...], size: int, limit: int) -> bool:
    """Some `size` vertices of `side` whose joint neighbourhood has at most `limit` vertices."""
    candidates = [v for v in side if rows[v].bit_count() <= limit]
    for chosen in combinations(candidates, size):
        union = 0
        for v in chosen:
            union |= rows[v]
        if union.bit_count() <= limit:
            return True
    return False


def _orientations(g: BipartiteGraph) -> Iterator[BipartiteGraph]:
    yield g
    if g.is_balanced():
        yield g.swap_parts()


def _in_empty_block_family(g: BipartiteGraph, rows_side_size: int, k: int) -> bool:
    """An empty block S x T with S in X, |S| = rows_side_size, |T| = |Y| - k."""
    return _small_neighbourhood(g.graph.rows, g.x, rows_side_size, k)


def _in_r(g: BipartiteGraph, k: int) -> bool:
    rows = g.graph.rows
    for chosen in combinations(g.x, k):
        s_mask = mask_of(chosen)
        neighbourhood = 0
        for v in chosen:
            neighbourhood |= rows[v]
        closed = mask_of(y for y in g.y if rows[y] & ~s_mask == 0)
        if neighbourhood.bit_count() <= k and neighbourhood & ~closed == 0 and closed.bit_count() >= k:
            return True
    return False


def _in_l_under(g: Graph, k: int) -> bool:
    return _splits(_component_sizes(g.rows, g.full_mask), k + 1)


def _in_l(g: Graph, k: int) -> bool:
    full = g.full_mask
    return any(_splits(_component_sizes(g.rows, full & ~(1 << v)), k) for v in range(g.n))


def _in_n_family(g: Graph, k: int, isolated: int) -> bool:
    """Some k-set S leaves at least `isolated` vertices of degree 0 in G - S."""
    rows = g.rows
    for chosen in combinations(range(g.n), k):
        s_mask = mask_of(chosen)
        count = sum(1 for v in range(g.n) if not s_mask >> v & 1 and rows[v] & ~s_mask == 0)
        if count >= isolated:
            return True
    return False


def _require_bipartite(g: Graph | BipartiteGraph, family: Family) -> BipartiteGraph:
    if not isinstance(g, BipartiteGraph):
        raise ClassMismatchError(f"{family.value} membership needs a bipartite graph with fixed parts")
    return g


def _check_cap(g: Graph | BipartiteGraph, family: Family) -> None:
    if g.n > config.SUBSET_SEARCH_CAP:
        raise SizeCapExceededError(f"{family.value} membership subset search", g.n, config.SUBSET_SEARCH_CAP)


def is_sub_family(g: Graph | BipartiteGraph, params: FamilyParams) -> bool:
    """Whether g is a spanning subgraph of family_n^k under some part-respecting relabelling."""
    validate_family_params(params)
    family, n, k = params.family, params.n, params.k
    if g.n != family_order(family, n):
        logger.debug(f"Order {g.n} does not match {params.label()}")
        return False
    match family:
        case Family.B | Family.Q | Family.R:
            bipartite = _require_bipartite(g, family)
            if bipartite.part_sizes() != (n, n):
                return False
            _check_cap(g, family)
            if family is Family.R:
                return any(_in_r(o, k) for o in _orientations(bipartite))
            side = k if family is Family.B else k + 1
            return any(_in_empty_block_family(o, side, k) for o in _orientations(bipartite))
        case Family.C:
            bipartite = _require_bipartite(g, family).oriented()
            if bipartite.part_sizes() != (n, n - 1):
                return False
            _check_cap(g, family)
            # the k side of the missing block lies in the smaller part
            return _small_neighbourhood(bipartite.graph.rows, bipartite.y, k, k)
        case Family.L_UNDER | Family.L:
            graph = g.graph if isinstance(g, BipartiteGraph) else g
            return _in_l_under(graph, k) if family is Family.L_UNDER else _in_l(graph, k)
        case Family.N_UNDER | Family.N:
            graph = g.graph if isinstance(g, BipartiteGraph) else g
            _check_cap(graph, family)
            return _in_n_family(graph, k, k + 1 if family is Family.N_UNDER else k)
