from collections.abc import Iterable
import logging

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.hamiltonicity.oracle import cross_check
from src.models.hamiltonicity import EngineAgreementReport
from src.utils.exceptions import GraphError

logger = logging.getLogger(__name__)


def cross_validate_engines(corpus: Iterable[Graph | BipartiteGraph], cap: int | None = None) -> EngineAgreementReport:
    """Run both oracle engines over the corpus; only disagreeing graphs are kept in full."""
    graphs = skipped = agreeing = 0
    disagreements = []
    for g in corpus:
        graphs += 1
        try:
            comparison = cross_check(g, cap)
        except GraphError as e:
            logger.debug(f"Cross-check skipped, {str(e)}")
            skipped += 1
            continue
        if comparison.agree:
            agreeing += 1
        else:
            disagreements.append(comparison)
    logger.info(f"Engines agree on {agreeing} of {graphs - skipped} graphs")
    return EngineAgreementReport(graphs=graphs, skipped=skipped, agreeing=agreeing, disagreements=disagreements)
