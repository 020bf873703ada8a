from collections.abc import Iterable, Iterator
import logging

import networkx as nx

from src.constants import GRAPH6_HEADER
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.models.graph_payload import GraphPayload
from src.utils.exceptions import Graph6ParseError, InvalidGraphError

logger = logging.getLogger(__name__)


def encode_graph6(g: Graph | BipartiteGraph) -> str:
    graph = g.graph if isinstance(g, BipartiteGraph) else g
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def decode_graph6(line: str, line_number: int | None = None) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6ParseError("empty graph6 string", line_number)
    try:
        graph = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as e:
        raise Graph6ParseError(f"malformed graph6 {text!r}: {e}", line_number) from e
    return Graph.from_networkx(graph)


def encode_payload(g: Graph | BipartiteGraph) -> GraphPayload:
    if isinstance(g, BipartiteGraph):
        return GraphPayload(graph6=encode_graph6(g), x=list(g.x))
    return GraphPayload(graph6=encode_graph6(g))


def decode_payload(payload: GraphPayload) -> Graph | BipartiteGraph:
    graph = decode_graph6(payload.graph6)
    if payload.x is None:
        return graph
    try:
        return BipartiteGraph.from_graph(graph, payload.x)
    except InvalidGraphError as e:
        raise Graph6ParseError(f"bipartite sidecar does not fit {payload.graph6!r}: {e}") from e


def ingest_graph6(lines: Iterable[str], skip_malformed: bool = True) -> Iterator[Graph]:
    """Decode a stream of graph6 lines; blank lines are skipped, malformed ones skipped or raised."""
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            logger.warning(f"line {line_number}: empty graph6 line skipped")
            continue
        try:
            yield decode_graph6(line, line_number)
        except Graph6ParseError as e:
            if not skip_malformed:
                raise
            logger.warning(f"{e}, line skipped")
