import re

from src.graphs.graph import Graph, build_graph
from src.utils.exceptions import InvalidGraphError

_HEADER = re.compile(r"^n\s+(\d+)$")
_PAIR = re.compile(r"^(\d+)\s*[\s-]\s*(\d+)$")


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines (0-based, '#' comments, optional "n <count>" header).

    Inline lists such as "0-1,1-2" are accepted as well. Without a header or an
    explicit n, the order is one more than the largest index seen.
    """
    declared = n
    edges: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        for chunk in raw.split("#", 1)[0].split(","):
            item = chunk.strip()
            if not item:
                continue
            header = _HEADER.match(item)
            if header:
                declared = int(header.group(1))
                continue
            pair = _PAIR.match(item)
            if pair is None:
                raise InvalidGraphError(f"line {line_number}: expected 'u v', got {item!r}")
            edges.append((int(pair.group(1)), int(pair.group(2))))
    order = declared if declared is not None else max((max(e) for e in edges), default=-1) + 1
    return build_graph(order, edges)
