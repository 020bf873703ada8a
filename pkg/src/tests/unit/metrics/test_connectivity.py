import networkx as nx
import pytest

from src.graphs.graph import Graph, build_graph
from src.graphs.named import complete_graph, cycle_graph, path_graph, star_graph
from src.harness.sampling import sample_random_graphs
from src.metrics.connectivity import is_connected, is_k_connected, min_degree, vertex_connectivity
from src.utils.exceptions import EmptyGraphError


def test_is_connected(c5: Graph, two_triangles: Graph) -> None:
    # Assert
    assert is_connected(c5)
    assert not is_connected(two_triangles)
    assert not is_connected(Graph(n=0, rows=()))


def test_min_degree(p3: Graph) -> None:
    # Act / Assert
    assert min_degree(p3) == 1


def test_min_degree__empty() -> None:
    # Act / Assert
    with pytest.raises(EmptyGraphError):
        min_degree(Graph(n=0, rows=()))


@pytest.mark.parametrize(
    ("g", "kappa"),
    [
        (complete_graph(5), 4),
        (cycle_graph(7), 2),
        (path_graph(4), 1),
        (star_graph(5), 1),
        (build_graph(4, [(0, 1), (2, 3)]), 0),
        (complete_graph(1), 0),
    ],
)
@pytest.mark.parametrize("method", ["exhaustive", "flow"])
def test_vertex_connectivity(g: Graph, kappa: int, method: str) -> None:
    # Act / Assert
    assert vertex_connectivity(g, method) == kappa  # type: ignore[arg-type]


def test_vertex_connectivity__petersen(petersen: Graph) -> None:
    # Act / Assert
    assert vertex_connectivity(petersen) == 3


def test_vertex_connectivity__methods_agree_on_random_graphs() -> None:
    # Arrange
    graphs = list(sample_random_graphs(9, 30, seed=3, p=0.6))

    # Act / Assert
    for g in graphs:
        exhaustive = vertex_connectivity(g, "exhaustive")
        assert exhaustive == vertex_connectivity(g, "flow")
        assert exhaustive == nx.node_connectivity(g.to_networkx())


def test_is_k_connected() -> None:
    # Arrange
    g = complete_graph(4)

    # Assert
    assert is_k_connected(g, 3)
    assert not is_k_connected(g, 4)
