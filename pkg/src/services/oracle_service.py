from collections.abc import Iterable

from result import Ok, Result

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.harness.cross_validation import cross_validate_engines
from src.hamiltonicity.oracle import check_property, hamiltonicity_profile
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.oracle_engine import OracleEngine
from src.models.error_result import ErrorResult
from src.models.hamiltonicity import EngineAgreementReport, HamiltonicityProfile, OracleVerdict
from src.services.base_service import BaseService
from src.utils.exceptions import GraphError


class OracleService(BaseService):
    def __init__(self, engine: OracleEngine = OracleEngine.BACKTRACKING, cap: int | None = None) -> None:
        self.engine = engine
        self.cap = cap

    def check(self, g: Graph | BipartiteGraph, prop: HamiltonicityProperty) -> Result[OracleVerdict, ErrorResult]:
        try:
            verdict = check_property(g, prop, self.engine, self.cap)
        except GraphError as e:
            return self._from_error(e)
        return Ok(verdict)

    def profile(self, g: Graph | BipartiteGraph) -> Result[HamiltonicityProfile, ErrorResult]:
        try:
            profile = hamiltonicity_profile(g, self.engine, self.cap)
        except GraphError as e:
            return self._from_error(e)
        return Ok(profile)

    def cross_validate(self, corpus: Iterable[Graph | BipartiteGraph]) -> Result[EngineAgreementReport, ErrorResult]:
        try:
            report = cross_validate_engines(corpus, self.cap)
        except GraphError as e:
            return self._from_error(e)
        return Ok(report)
