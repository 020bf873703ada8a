from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph, build_graph


def empty_graph(n: int) -> Graph:
    return Graph(n=n, rows=(0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n=n, rows=tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return build_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return build_graph(10, outer + spokes + inner)


def empty_bipartite_graph(a: int, b: int) -> BipartiteGraph:
    """O_{a,b}: parts X = 0..a-1, Y = a..a+b-1, no edges."""
    return BipartiteGraph.from_biadjacency(a, b, 0)


def complete_bipartite_graph(a: int, b: int) -> BipartiteGraph:
    """K_{a,b}: parts X = 0..a-1, Y = a..a+b-1, every X-Y edge."""
    return BipartiteGraph.from_biadjacency(a, b, (1 << (a * b)) - 1)


def perfect_matching(n: int) -> BipartiteGraph:
    """n disjoint X-Y edges x_i y_i."""
    return BipartiteGraph.from_biadjacency(n, n, sum(1 << (i * n + i) for i in range(n)))
