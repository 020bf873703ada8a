from result import Ok, Result

from src.conditions.catalog import select_entries
from src.conditions.derivation import implied_edge_inequality
from src.conditions.evaluator import (
    applicable_bound_lemmas,
    evaluate_bound_lemma,
    evaluate_condition,
    exceptions_matching,
)
from src.conditions.facts import GraphFacts
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.mappers.catalog import to_catalog_entry_dump
from src.models.base import ModelList
from src.models.condition import (
    BoundEvaluation,
    CatalogEntryDump,
    ConditionVerdict,
    EdgeImplication,
    ExceptionMembership,
)
from src.models.error_result import ErrorResult
from src.services.base_service import BaseService
from src.utils.exceptions import GraphError


class ConditionService(BaseService):
    def catalog(self, patterns: list[str] | None = None) -> Result[ModelList[CatalogEntryDump], ErrorResult]:
        try:
            dumps = [to_catalog_entry_dump(entry) for entry in select_entries(patterns)]
        except GraphError as e:
            return self._from_error(e)
        return Ok(ModelList[CatalogEntryDump](items=dumps, total=len(dumps)))

    def check(self, entry_id: str, g: Graph | BipartiteGraph, k: int) -> Result[ConditionVerdict, ErrorResult]:
        try:
            verdict = evaluate_condition(entry_id, g, k)
        except GraphError as e:
            return self._from_error(e)
        return Ok(verdict)

    def exceptions(
        self, entry_id: str, g: Graph | BipartiteGraph, k: int
    ) -> Result[ModelList[ExceptionMembership], ErrorResult]:
        try:
            memberships = exceptions_matching(entry_id, g, k)
        except GraphError as e:
            return self._from_error(e)
        return Ok(ModelList[ExceptionMembership](items=memberships, total=len(memberships)))

    def implication(self, entry_id: str, g: Graph | BipartiteGraph, k: int) -> Result[EdgeImplication, ErrorResult]:
        try:
            implication = implied_edge_inequality(entry_id, g, k)
        except GraphError as e:
            return self._from_error(e)
        return Ok(implication)

    def bound_lemmas(self, g: Graph | BipartiteGraph) -> Result[ModelList[BoundEvaluation], ErrorResult]:
        facts = GraphFacts(g)
        try:
            evaluations = [evaluate_bound_lemma(lemma_id, facts) for lemma_id in applicable_bound_lemmas(facts)]
        except GraphError as e:
            return self._from_error(e)
        return Ok(ModelList[BoundEvaluation](items=evaluations, total=len(evaluations)))
