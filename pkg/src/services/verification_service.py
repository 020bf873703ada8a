from collections.abc import Iterable
from typing import IO

from result import Ok, Result

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.harness.closed_forms import verify_closed_forms
from src.harness.corpus import build_corpus
from src.harness.verify import verify_corpus
from src.models.base import ModelList
from src.models.error_result import ErrorResult
from src.models.verification import ClosedFormCheck, CorpusSpec, VerificationOptions, VerificationReport
from src.services.base_service import BaseService
from src.utils.exceptions import GraphError


class VerificationService(BaseService):
    def verify(
        self,
        corpus: CorpusSpec | Iterable[Graph | BipartiteGraph],
        options: VerificationOptions,
        sink: IO[str] | None = None,
    ) -> Result[VerificationReport, ErrorResult]:
        # generators raise lazily, so corpus errors surface inside verify_corpus
        try:
            graphs = build_corpus(corpus) if isinstance(corpus, CorpusSpec) else corpus
            report = verify_corpus(graphs, options, sink)
        except GraphError as e:
            return self._from_error(e)
        return Ok(report)

    def closed_forms(self, n_max: int = 14, k_max: int = 3) -> Result[ModelList[ClosedFormCheck], ErrorResult]:
        try:
            checks = verify_closed_forms(n_max=n_max, k_max=k_max)
        except GraphError as e:
            return self._from_error(e)
        return Ok(ModelList[ClosedFormCheck](items=checks, total=len(checks)))
