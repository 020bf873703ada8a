from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(n=g.n, rows=tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def quasi_complement(g: BipartiteGraph) -> BipartiteGraph:
    """Bipartite graph on the same parts whose edges are the missing X-Y pairs of g."""
    x_mask = g.x_mask
    y_mask = g.y_mask
    rows = list(g.graph.rows)
    for v in g.x:
        rows[v] = y_mask & ~rows[v]
    for v in g.y:
        rows[v] = x_mask & ~rows[v]
    return BipartiteGraph(graph=Graph(n=g.n, rows=tuple(rows)), x=g.x, y=g.y)


def _shifted_rows(g: Graph, offset: int) -> list[int]:
    return [row << offset for row in g.rows]


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 + G2; the vertices of g2 are shifted after those of g1."""
    return Graph(n=g1.n + g2.n, rows=tuple(list(g1.rows) + _shifted_rows(g2, g1.n)))


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 v G2: the union plus every edge between the two vertex sets."""
    g1_mask = g1.full_mask
    g2_mask = g2.full_mask << g1.n
    rows = [row | g2_mask for row in g1.rows] + [row | g1_mask for row in _shifted_rows(g2, g1.n)]
    return Graph(n=g1.n + g2.n, rows=tuple(rows))


def bipartite_disjoint_union(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    offset = g1.n
    return BipartiteGraph(
        graph=disjoint_union(g1.graph, g2.graph),
        x=g1.x + tuple(v + offset for v in g2.x),
        y=g1.y + tuple(v + offset for v in g2.y),
    )


def bipartite_join(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    """G1 ⊔ G2: the union plus all X1-Y2 and Y1-X2 edges; X lists X1 then X2."""
    union = bipartite_disjoint_union(g1, g2)
    offset = g1.n
    x1 = g1.x_mask
    y1 = g1.y_mask
    x2 = g2.x_mask << offset
    y2 = g2.y_mask << offset
    rows = list(union.graph.rows)
    for v in g1.x:
        rows[v] |= y2
    for v in g1.y:
        rows[v] |= x2
    for v in g2.x:
        rows[v + offset] |= y1
    for v in g2.y:
        rows[v + offset] |= x1
    return BipartiteGraph(graph=Graph(n=union.n, rows=tuple(rows)), x=union.x, y=union.y)
