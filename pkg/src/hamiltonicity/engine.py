from typing import Protocol

from src.graphs.graph import Graph


class HamiltonicityEngine(Protocol):
    """Exact search backend. Witnesses are vertex sequences; cycles do not repeat the start."""

    def hamiltonian_cycle(self, g: Graph) -> list[int] | None: ...

    def hamiltonian_path(self, g: Graph) -> list[int] | None: ...

    def hamiltonian_path_from(self, g: Graph, start: int) -> list[int] | None: ...

    def hamiltonian_path_between(self, g: Graph, start: int, end: int) -> list[int] | None: ...

    def is_hamilton_connected(self, g: Graph) -> bool: ...

    def is_traceable_from_every_vertex(self, g: Graph) -> bool: ...
