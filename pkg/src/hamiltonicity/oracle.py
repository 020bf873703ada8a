import logging

from src.config.config import config
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.graph6 import encode_graph6
from src.hamiltonicity.backtracking import BacktrackingEngine
from src.hamiltonicity.engine import HamiltonicityEngine
from src.hamiltonicity.held_karp import HeldKarpEngine
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.oracle_engine import OracleEngine
from src.models.hamiltonicity import EngineComparison, HamiltonicityProfile, OracleVerdict
from src.utils.exceptions import EmptyGraphError, SizeCapExceededError

logger = logging.getLogger(__name__)

_ENGINES: dict[OracleEngine, HamiltonicityEngine] = {
    OracleEngine.BACKTRACKING: BacktrackingEngine(),
    OracleEngine.HELD_KARP: HeldKarpEngine(),
}


def _prepare(g: Graph | BipartiteGraph, cap: int | None) -> Graph:
    graph = g.graph if isinstance(g, BipartiteGraph) else g
    limit = config.ORACLE_SIZE_CAP if cap is None else cap
    if graph.n == 0:
        raise EmptyGraphError("Hamiltonicity is undefined on the graph with no vertices")
    if graph.n > limit:
        raise SizeCapExceededError("Hamiltonicity oracle", graph.n, limit)
    return graph


def has_hamiltonian_cycle(
    g: Graph | BipartiteGraph, engine: OracleEngine = OracleEngine.BACKTRACKING, cap: int | None = None
) -> OracleVerdict:
    witness = _ENGINES[engine].hamiltonian_cycle(_prepare(g, cap))
    return OracleVerdict(
        prop=HamiltonicityProperty.HAMILTONIAN, holds=witness is not None, witness=witness, engine=engine
    )


def has_hamiltonian_path(
    g: Graph | BipartiteGraph, engine: OracleEngine = OracleEngine.BACKTRACKING, cap: int | None = None
) -> OracleVerdict:
    witness = _ENGINES[engine].hamiltonian_path(_prepare(g, cap))
    return OracleVerdict(
        prop=HamiltonicityProperty.TRACEABLE, holds=witness is not None, witness=witness, engine=engine
    )


def hamiltonian_path_from(
    g: Graph | BipartiteGraph, start: int, engine: OracleEngine = OracleEngine.BACKTRACKING, cap: int | None = None
) -> list[int] | None:
    return _ENGINES[engine].hamiltonian_path_from(_prepare(g, cap), start)


def hamiltonian_path_between(
    g: Graph | BipartiteGraph,
    start: int,
    end: int,
    engine: OracleEngine = OracleEngine.BACKTRACKING,
    cap: int | None = None,
) -> list[int] | None:
    return _ENGINES[engine].hamiltonian_path_between(_prepare(g, cap), start, end)


def is_hamilton_connected(
    g: Graph | BipartiteGraph,
    engine: OracleEngine = OracleEngine.BACKTRACKING,
    cap: int | None = None,
    parity_shortcut: bool | None = None,
) -> bool:
    graph = _prepare(g, cap)
    shortcut = config.HAMILTON_CONNECTED_PARITY_SHORTCUT if parity_shortcut is None else parity_shortcut
    # bipartite graphs on three or more vertices fail for some pair by path-length parity
    if shortcut and graph.n >= 3 and graph.is_bipartite():
        return False
    return _ENGINES[engine].is_hamilton_connected(graph)


def is_traceable_from_every_vertex(
    g: Graph | BipartiteGraph, engine: OracleEngine = OracleEngine.BACKTRACKING, cap: int | None = None
) -> bool:
    return _ENGINES[engine].is_traceable_from_every_vertex(_prepare(g, cap))


def check_property(
    g: Graph | BipartiteGraph,
    prop: HamiltonicityProperty,
    engine: OracleEngine = OracleEngine.BACKTRACKING,
    cap: int | None = None,
) -> OracleVerdict:
    match prop:
        case HamiltonicityProperty.HAMILTONIAN:
            return has_hamiltonian_cycle(g, engine, cap)
        case HamiltonicityProperty.TRACEABLE:
            return has_hamiltonian_path(g, engine, cap)
        case HamiltonicityProperty.HAMILTON_CONNECTED:
            return OracleVerdict(prop=prop, holds=is_hamilton_connected(g, engine, cap), engine=engine)
        case HamiltonicityProperty.TRACEABLE_FROM_EVERY_VERTEX:
            return OracleVerdict(prop=prop, holds=is_traceable_from_every_vertex(g, engine, cap), engine=engine)


def hamiltonicity_profile(
    g: Graph | BipartiteGraph,
    engine: OracleEngine = OracleEngine.BACKTRACKING,
    cap: int | None = None,
    parity_shortcut: bool | None = None,
) -> HamiltonicityProfile:
    graph = _prepare(g, cap)
    backend = _ENGINES[engine]
    path = backend.hamiltonian_path(graph)
    cycle = backend.hamiltonian_cycle(graph) if path is not None else None
    if path is None:
        from_every_vertex = False
    elif cycle is not None:
        from_every_vertex = True
    else:
        from_every_vertex = backend.is_traceable_from_every_vertex(graph)
    # Hamilton-connected on n >= 3 forces a spanning cycle
    if graph.n >= 3 and cycle is None:
        hamilton_connected = False
    else:
        hamilton_connected = is_hamilton_connected(graph, engine, cap, parity_shortcut)
    return HamiltonicityProfile(
        hamiltonian=cycle is not None,
        traceable=path is not None,
        hamilton_connected=hamilton_connected,
        traceable_from_every_vertex=from_every_vertex,
        cycle_witness=cycle,
        path_witness=path,
        engine=engine,
    )


def cross_check(g: Graph | BipartiteGraph, cap: int | None = None) -> EngineComparison:
    """Profile g with both engines; any differing property is a disagreement."""
    graph = _prepare(g, cap)
    backtracking = hamiltonicity_profile(graph, OracleEngine.BACKTRACKING, cap, parity_shortcut=False)
    held_karp = hamiltonicity_profile(graph, OracleEngine.HELD_KARP, cap, parity_shortcut=False)
    disagreements = [prop for prop in HamiltonicityProperty if backtracking.holds(prop) != held_karp.holds(prop)]
    if disagreements:
        logger.warning(f"Oracle engines disagree on {encode_graph6(graph)}: {[p.value for p in disagreements]}")
    return EngineComparison(
        graph6=encode_graph6(graph),
        agree=not disagreements,
        disagreements=disagreements,
        backtracking=backtracking,
        held_karp=held_karp,
    )
