from collections.abc import Iterable, Iterator
import logging
from pathlib import Path

from pydantic import ValidationError

from src.graphs.bipartite import BipartiteGraph
from src.graphs.families import generate_family
from src.graphs.graph import Graph
from src.graphs.graph6 import decode_graph6, decode_payload
from src.harness.enumeration import enumerate_bipartite_graphs, enumerate_labeled_graphs
from src.harness.sampling import sample_random_bipartite_graphs, sample_random_graphs
from src.models.enums.corpus_kind import CorpusKind
from src.models.graph_payload import GraphPayload
from src.models.verification import CorpusSpec
from src.utils.exceptions import Graph6ParseError, InvalidGraphError

logger = logging.getLogger(__name__)


def read_graph_lines(lines: Iterable[str], skip_malformed: bool = True) -> Iterator[Graph | BipartiteGraph]:
    """graph6 lines, or JSON lines {"graph6": ..., "X": [...]} carrying bipartite parts."""
    for line_number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            logger.warning(f"line {line_number}: empty line skipped")
            continue
        try:
            if text.startswith("{"):
                try:
                    payload = GraphPayload.model_validate_json(text)
                except ValidationError as e:
                    raise Graph6ParseError(f"malformed graph payload: {e}", line_number) from e
                yield decode_payload(payload)
            else:
                yield decode_graph6(text, line_number)
        except Graph6ParseError as e:
            if not skip_malformed:
                raise
            logger.warning(f"{e}, line skipped")


def _parts(spec: CorpusSpec) -> tuple[int, int]:
    if spec.parts is None:
        raise InvalidGraphError(f"Corpus kind {spec.kind.value} needs parts")
    a, b = spec.parts
    # the larger part is X
    return (a, b) if a >= b else (b, a)


def _order(spec: CorpusSpec) -> int:
    if spec.n is None:
        raise InvalidGraphError(f"Corpus kind {spec.kind.value} needs n")
    return spec.n


def build_corpus(spec: CorpusSpec) -> Iterator[Graph | BipartiteGraph]:
    match spec.kind:
        case CorpusKind.ENUMERATE:
            yield from enumerate_labeled_graphs(
                _order(spec), min_degree=spec.min_degree, connected_complement=spec.connected_complement
            )
        case CorpusKind.ENUMERATE_BIPARTITE:
            a, b = _parts(spec)
            yield from enumerate_bipartite_graphs(
                a,
                b,
                min_degree=spec.min_degree,
                min_edges=spec.min_edges,
                connected_quasi_complement=spec.connected_complement,
            )
        case CorpusKind.RANDOM:
            yield from sample_random_graphs(
                _order(spec),
                spec.count or 0,
                model=spec.model,
                seed=spec.seed,
                p=spec.p,
                min_degree=spec.min_degree,
                n_max=spec.n_max,
            )
        case CorpusKind.RANDOM_BIPARTITE:
            a, b = _parts(spec)
            yield from sample_random_bipartite_graphs(
                a, b, spec.count or 0, p=spec.p, seed=spec.seed, min_degree=spec.min_degree
            )
        case CorpusKind.GRAPH6:
            if spec.path is None:
                raise InvalidGraphError("Corpus kind graph6 needs a path")
            with Path(spec.path).open(encoding="ascii") as stream:
                yield from read_graph_lines(stream)
        case CorpusKind.FAMILY:
            if spec.family is None:
                raise InvalidGraphError("Corpus kind family needs family parameters")
            yield generate_family(spec.family)
