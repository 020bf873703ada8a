import logging

from src.graphs.graph import Graph
from src.utils.bitsets import lowest_bit

logger = logging.getLogger(__name__)


def reach_table(g: Graph, starts: int) -> list[int]:
    """reach[mask] = ends of the paths that start in `starts` and visit exactly `mask`, as a bitset."""
    size = 1 << g.n
    reach = [0] * size
    rows = g.rows
    pending = starts
    while pending:
        low = pending & -pending
        reach[low] = low
        pending ^= low
    for mask in range(1, size):
        ends = reach[mask]
        if not ends:
            continue
        ext = 0
        while ends:
            low = ends & -ends
            ext |= rows[low.bit_length() - 1]
            ends ^= low
        ext &= ~mask
        while ext:
            low = ext & -ext
            reach[mask | low] |= low
            ext ^= low
    return reach


def _walk_back(g: Graph, reach: list[int], mask: int, end: int) -> list[int]:
    path = [end]
    while mask != 1 << end:
        mask ^= 1 << end
        end = lowest_bit(reach[mask] & g.rows[end])
        path.append(end)
    path.reverse()
    return path


class HeldKarpEngine:
    """Bitmask dynamic programming over (visited set, end vertex), O(2^n n^2)."""

    def hamiltonian_cycle(self, g: Graph) -> list[int] | None:
        if g.n < 3:
            return None
        reach = reach_table(g, 1)
        closing = reach[g.full_mask] & g.rows[0]
        if not closing:
            return None
        return _walk_back(g, reach, g.full_mask, lowest_bit(closing))

    def hamiltonian_path(self, g: Graph) -> list[int] | None:
        if g.n == 0:
            return None
        reach = reach_table(g, g.full_mask)
        ends = reach[g.full_mask]
        return _walk_back(g, reach, g.full_mask, lowest_bit(ends)) if ends else None

    def hamiltonian_path_from(self, g: Graph, start: int) -> list[int] | None:
        reach = reach_table(g, 1 << start)
        ends = reach[g.full_mask]
        return _walk_back(g, reach, g.full_mask, lowest_bit(ends)) if ends else None

    def hamiltonian_path_between(self, g: Graph, start: int, end: int) -> list[int] | None:
        if start == end:
            return [start] if g.n == 1 else None
        reach = reach_table(g, 1 << start)
        if not reach[g.full_mask] >> end & 1:
            return None
        return _walk_back(g, reach, g.full_mask, end)

    def is_hamilton_connected(self, g: Graph) -> bool:
        full = g.full_mask
        for start in range(g.n - 1):
            later = full & ~((1 << (start + 1)) - 1)
            if reach_table(g, 1 << start)[full] & later != later:
                logger.debug(f"No spanning path from {start} to every later vertex")
                return False
        return g.n > 0

    def is_traceable_from_every_vertex(self, g: Graph) -> bool:
        # path ends over all starts are exactly the possible starts, by reversal
        return g.n > 0 and reach_table(g, g.full_mask)[g.full_mask] == g.full_mask
