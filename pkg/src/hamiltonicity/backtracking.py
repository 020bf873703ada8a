from collections.abc import Sequence
import logging

from src.graphs.graph import Graph
from src.utils.bitsets import iter_bits

logger = logging.getLogger(__name__)


def _component_of(rows: tuple[int, ...], seeds: int, alive: int) -> int:
    seen = seeds & alive
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
    return seen


def _component_count(rows: tuple[int, ...], alive: int, limit: int) -> int:
    """Components of the subgraph induced by alive, counted up to limit."""
    count = 0
    while alive and count < limit:
        alive &= ~_component_of(rows, alive & -alive, alive)
        count += 1
    return count


class _PathSearch:
    """Depth-first extension of a partial path with connectivity, degree and cut-vertex pruning.

    `end` fixes the last vertex; `closing` requires the last vertex to be adjacent to it.
    """

    def __init__(self, g: Graph, end: int | None = None, closing: int | None = None) -> None:
        self.rows = g.rows
        self.full = g.full_mask
        self.end = end
        self.closing = closing

    def run(self, start: int) -> list[int] | None:
        path = [start]
        return path if self._extend(path, 1 << start) else None

    def _feasible(self, tip: int, remaining: int) -> bool:
        rows = self.rows
        # everything left must still be reachable from the tip through unvisited vertices
        if _component_of(rows, rows[tip], remaining) != remaining:
            return False
        anchors = 1 << tip
        if self.closing is not None:
            anchors |= 1 << self.closing
        open_ends = 0
        for u in iter_bits(remaining):
            available = (rows[u] & (remaining | anchors)).bit_count()
            if available >= 2:
                continue
            if self.closing is not None or available == 0:
                return False
            if self.end is not None:
                if u != self.end:
                    return False
                continue
            open_ends += 1
            if open_ends > 1:
                return False
        return self._no_cut_splits(remaining)

    def _no_cut_splits(self, remaining: int) -> bool:
        # the rest of the path spans G[remaining]; cutting one vertex out of a path leaves at most two pieces
        rows = self.rows
        if _component_count(rows, remaining, 2) > 1:
            return False
        if remaining.bit_count() < 4:
            return True
        return all(_component_count(rows, remaining & ~(1 << c), 3) < 3 for c in iter_bits(remaining))

    def _extend(self, path: list[int], visited: int) -> bool:
        tip = path[-1]
        remaining = self.full & ~visited
        if not remaining:
            if self.end is not None and tip != self.end:
                return False
            return self.closing is None or bool(self.rows[tip] >> self.closing & 1)
        if not self._feasible(tip, remaining):
            return False
        options = self.rows[tip] & remaining
        if self.end is not None and remaining != 1 << self.end:
            options &= ~(1 << self.end)
        ordered = sorted(iter_bits(options), key=lambda v: ((self.rows[v] & remaining).bit_count(), v))
        for v in ordered:
            path.append(v)
            if self._extend(path, visited | 1 << v):
                return True
            path.pop()
        return False


class BacktrackingEngine:
    """Pruned depth-first search; fewest-onward-options neighbours are tried first."""

    def hamiltonian_cycle(self, g: Graph) -> list[int] | None:
        if g.n < 3 or min(g.degrees()) < 2:
            return None
        return _PathSearch(g, closing=0).run(0)

    def hamiltonian_path(self, g: Graph) -> list[int] | None:
        if g.n == 0:
            return None
        if g.n == 1:
            return [0]
        degrees = g.degrees()
        leaves = [v for v, d in enumerate(degrees) if d <= 1]
        if len(leaves) > 2 or _component_of(g.rows, 1, g.full_mask) != g.full_mask:
            return None
        # a degree-one vertex can only be an end
        starts: Sequence[int] = leaves[:1] if leaves else range(g.n)
        search = _PathSearch(g)
        for start in starts:
            path = search.run(start)
            if path is not None:
                return path
        return None

    def hamiltonian_path_from(self, g: Graph, start: int) -> list[int] | None:
        return _PathSearch(g).run(start)

    def hamiltonian_path_between(self, g: Graph, start: int, end: int) -> list[int] | None:
        if start == end:
            return [start] if g.n == 1 else None
        return _PathSearch(g, end=end).run(start)

    def is_hamilton_connected(self, g: Graph) -> bool:
        if g.n == 0:
            return False
        if g.n >= 3 and min(g.degrees()) < 2:
            return False
        for start in range(g.n):
            for end in range(start + 1, g.n):
                if self.hamiltonian_path_between(g, start, end) is None:
                    logger.debug(f"No spanning path between {start} and {end}")
                    return False
        return True

    def is_traceable_from_every_vertex(self, g: Graph) -> bool:
        if g.n == 0:
            return False
        covered = 0
        for start in range(g.n):
            if covered >> start & 1:
                continue
            path = self.hamiltonian_path_from(g, start)
            if path is None:
                return False
            covered |= 1 << path[0] | 1 << path[-1]
        return True
