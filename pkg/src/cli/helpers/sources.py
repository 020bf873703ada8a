import argparse
from pathlib import Path
import sys

from pydantic import ValidationError

from src.graphs.bipartite import BipartiteGraph
from src.graphs.edge_list import parse_edge_list
from src.graphs.families import generate_family
from src.graphs.graph import Graph
from src.graphs.graph6 import decode_graph6, decode_payload
from src.models.enums.corpus_kind import CorpusKind, SamplingModel
from src.models.enums.family import Family
from src.models.family import FamilyParams
from src.models.graph_payload import GraphPayload
from src.models.verification import CorpusSpec
from src.utils.exceptions import Graph6ParseError, InvalidGraphError


def add_graph_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--graph6", help="graph6 string")
    group.add_argument("--edges", help='inline edge list such as "0-1,1-2"')
    group.add_argument("--file", help="file with a graph6 line, a JSON payload or an edge list; '-' for stdin")
    group.add_argument("--family", nargs=3, metavar=("F", "N", "K"), help="extremal family member, e.g. C 7 2")
    parser.add_argument("--parts", help="comma-separated vertices of part X, making the input bipartite")


def family_params(values: list[str]) -> FamilyParams:
    family, n, k = values
    try:
        return FamilyParams(family=Family(family), n=int(n), k=int(k))
    except (ValueError, ValidationError) as e:
        raise InvalidGraphError(f"Invalid family parameters {' '.join(values)}: {e}") from e


def _first_content_line(text: str) -> str:
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            return stripped
    raise InvalidGraphError("Graph input is empty")


def parse_graph_text(text: str) -> Graph | BipartiteGraph:
    """Autodetect: JSON payload, edge list (graph6 never contains digits) or graph6."""
    first = _first_content_line(text)
    if first.startswith("{"):
        try:
            return decode_payload(GraphPayload.model_validate_json(first))
        except ValidationError as e:
            raise Graph6ParseError(f"malformed graph payload: {e}", 1) from e
    if any(c.isdigit() for c in first):
        return parse_edge_list(text)
    return decode_graph6(first, 1)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _parts(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError as e:
        raise InvalidGraphError(f"--parts expects comma-separated vertex indices, got {value!r}") from e


def read_graph(args: argparse.Namespace) -> Graph | BipartiteGraph:
    if args.graph6 is not None:
        g: Graph | BipartiteGraph = decode_graph6(args.graph6)
    elif args.edges is not None:
        g = parse_edge_list(args.edges)
    elif args.family is not None:
        g = generate_family(family_params(args.family))
    else:
        g = parse_graph_text(_read_text(args.file or "-"))
    if args.parts is not None:
        graph = g.graph if isinstance(g, BipartiteGraph) else g
        g = BipartiteGraph.from_graph(graph, _parts(args.parts))
    return g


def add_corpus_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--enumerate", type=int, metavar="N", help="every labeled graph on N vertices")
    group.add_argument("--enumerate-bipartite", type=int, nargs=2, metavar=("A", "B"), help="every bipartite graph")
    group.add_argument("--random", type=int, metavar="N", help="seeded random graphs on N vertices")
    group.add_argument(
        "--random-bipartite", type=int, nargs=2, metavar=("A", "B"), help="seeded random bipartite graphs"
    )
    group.add_argument("--graph6-file", metavar="PATH", help="graph6 or JSON payload lines")
    group.add_argument("--family", nargs=3, metavar=("F", "N", "K"), help="a single extremal family member")
    parser.add_argument("--count", type=int, default=100, help="number of random graphs")
    parser.add_argument("--p", type=float, default=0.5, help="edge probability for random graphs")
    parser.add_argument(
        "--model", type=SamplingModel, choices=list(SamplingModel), default=SamplingModel.UNIFORM_EDGE_P
    )
    parser.add_argument("--n-max", type=int, help="random orders drawn from N..N_MAX")
    parser.add_argument("--min-degree", type=int, default=0)
    parser.add_argument("--min-edges", type=int, default=0)
    parser.add_argument(
        "--connected-complement", action="store_true", help="keep graphs whose (quasi-)complement is connected"
    )


def corpus_spec(args: argparse.Namespace) -> CorpusSpec:
    common = {
        "count": args.count,
        "p": args.p,
        "model": args.model,
        "n_max": args.n_max,
        "min_degree": args.min_degree,
        "min_edges": args.min_edges,
        "connected_complement": args.connected_complement,
        "seed": args.seed,
    }
    if args.enumerate is not None:
        return CorpusSpec(kind=CorpusKind.ENUMERATE, n=args.enumerate, **common)
    if args.enumerate_bipartite is not None:
        return CorpusSpec(kind=CorpusKind.ENUMERATE_BIPARTITE, parts=tuple(args.enumerate_bipartite), **common)
    if args.random is not None:
        return CorpusSpec(kind=CorpusKind.RANDOM, n=args.random, **common)
    if args.random_bipartite is not None:
        return CorpusSpec(kind=CorpusKind.RANDOM_BIPARTITE, parts=tuple(args.random_bipartite), **common)
    if args.graph6_file is not None:
        return CorpusSpec(kind=CorpusKind.GRAPH6, path=args.graph6_file, **common)
    return CorpusSpec(kind=CorpusKind.FAMILY, family=family_params(args.family), **common)
