from src.models.base import BaseModelWithConfig
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.oracle_engine import OracleEngine


class HamiltonicityProfile(BaseModelWithConfig):
    hamiltonian: bool
    traceable: bool
    hamilton_connected: bool
    traceable_from_every_vertex: bool
    cycle_witness: list[int] | None = None
    path_witness: list[int] | None = None
    engine: OracleEngine

    def holds(self, prop: HamiltonicityProperty) -> bool:
        match prop:
            case HamiltonicityProperty.HAMILTONIAN:
                return self.hamiltonian
            case HamiltonicityProperty.TRACEABLE:
                return self.traceable
            case HamiltonicityProperty.HAMILTON_CONNECTED:
                return self.hamilton_connected
            case HamiltonicityProperty.TRACEABLE_FROM_EVERY_VERTEX:
                return self.traceable_from_every_vertex


class OracleVerdict(BaseModelWithConfig):
    prop: HamiltonicityProperty
    holds: bool
    witness: list[int] | None = None
    engine: OracleEngine


class EngineComparison(BaseModelWithConfig):
    graph6: str
    agree: bool
    disagreements: list[HamiltonicityProperty]
    backtracking: HamiltonicityProfile
    held_karp: HamiltonicityProfile


class EngineAgreementReport(BaseModelWithConfig):
    graphs: int
    skipped: int
    agreeing: int
    disagreements: list[EngineComparison]
