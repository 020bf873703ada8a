import logging

from result import Ok, Result

from src.graphs.bipartite import BipartiteGraph
from src.graphs.families import generate_family
from src.graphs.graph import Graph
from src.graphs.graph6 import encode_payload
from src.graphs.operations import complement, quasi_complement
from src.metrics.indices import indices
from src.models.enums.measure import ComplementKind
from src.models.error_result import ErrorResult
from src.models.family import FamilyParams
from src.models.graph_payload import GraphPayload
from src.models.index_report import IndexReport
from src.services.base_service import BaseService
from src.utils.exceptions import ClassMismatchError, GraphError

logger = logging.getLogger(__name__)


def _complement_of(g: Graph | BipartiteGraph, kind: ComplementKind) -> Graph | BipartiteGraph:
    match kind:
        case ComplementKind.NONE:
            return g
        case ComplementKind.COMPLEMENT:
            return complement(g.graph if isinstance(g, BipartiteGraph) else g)
        case ComplementKind.QUASI_COMPLEMENT:
            if not isinstance(g, BipartiteGraph):
                raise ClassMismatchError("The quasi-complement needs a bipartite graph with fixed parts")
            return quasi_complement(g)


class GraphService(BaseService):
    def index(self, g: Graph | BipartiteGraph) -> Result[IndexReport, ErrorResult]:
        try:
            report = indices(g.graph if isinstance(g, BipartiteGraph) else g)
        except GraphError as e:
            return self._from_error(e)
        return Ok(report)

    def family(
        self, params: FamilyParams, kind: ComplementKind = ComplementKind.NONE
    ) -> Result[GraphPayload, ErrorResult]:
        try:
            g = _complement_of(generate_family(params), kind)
        except GraphError as e:
            return self._from_error(e)
        logger.debug(f"Generated {params.label()} ({kind.value})")
        return Ok(encode_payload(g))

    def complement(self, g: Graph | BipartiteGraph, quasi: bool = False) -> Result[GraphPayload, ErrorResult]:
        kind = ComplementKind.QUASI_COMPLEMENT if quasi else ComplementKind.COMPLEMENT
        try:
            result = _complement_of(g, kind)
        except GraphError as e:
            return self._from_error(e)
        return Ok(encode_payload(result))
