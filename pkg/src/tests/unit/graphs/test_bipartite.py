import pytest

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import build_graph
from src.graphs.named import complete_bipartite_graph, empty_bipartite_graph, perfect_matching
from src.graphs.operations import bipartite_disjoint_union, bipartite_join, complement, quasi_complement
from src.utils.exceptions import InvalidGraphError


def test_from_biadjacency() -> None:
    # Act
    g = BipartiteGraph.from_biadjacency(2, 3, 0b100001)

    # Assert
    assert g.x == (0, 1)
    assert g.y == (2, 3, 4)
    assert g.graph.edges() == [(0, 2), (1, 4)]


def test_from_parts__edge_inside_part() -> None:
    # Act / Assert
    with pytest.raises(InvalidGraphError, match="own part"):
        BipartiteGraph.from_parts([0, 1], [2], [(0, 1)])


def test_from_parts__parts_do_not_cover() -> None:
    # Act / Assert
    with pytest.raises(InvalidGraphError):
        BipartiteGraph(graph=build_graph(3, []), x=(0,), y=(1,))


def test_from_graph() -> None:
    # Arrange
    graph = build_graph(4, [(0, 1), (2, 3)])

    # Act
    g = BipartiteGraph.from_graph(graph, [2, 0])

    # Assert
    assert g.x == (0, 2)
    assert g.y == (1, 3)


def test_part_balance(k23: BipartiteGraph, k33: BipartiteGraph) -> None:
    # Assert
    assert k33.is_balanced()
    assert not k23.is_balanced()
    assert not k23.is_nearly_balanced()
    assert k23.oriented().is_nearly_balanced()
    assert k23.oriented().part_sizes() == (3, 2)
    assert k23.swap_parts().x == k23.y


def test_quasi_complement(matching_3: BipartiteGraph) -> None:
    # Act
    result = quasi_complement(matching_3)

    # Assert
    assert result.edge_count == 6
    assert result.x == matching_3.x
    assert quasi_complement(result) == matching_3


def test_quasi_complement_differs_from_complement(k33: BipartiteGraph) -> None:
    # Act
    hat = quasi_complement(k33)
    bar = complement(k33.graph)

    # Assert
    assert hat.edge_count == 0
    assert bar.edge_count == 6


def test_bipartite_join_of_single_vertex_parts() -> None:
    # Arrange
    o11 = empty_bipartite_graph(1, 1)

    # Act
    joined = bipartite_join(o11, o11)

    # Assert
    assert joined.part_sizes() == (2, 2)
    assert joined.graph.edges() == [(0, 3), (1, 2)]


def test_bipartite_disjoint_union() -> None:
    # Act
    union = bipartite_disjoint_union(complete_bipartite_graph(1, 1), complete_bipartite_graph(2, 2))

    # Assert
    assert union.x == (0, 2, 3)
    assert union.y == (1, 4, 5)
    assert union.edge_count == 5


def test_perfect_matching() -> None:
    # Act
    g = perfect_matching(3)

    # Assert
    assert g.graph.edges() == [(0, 3), (1, 4), (2, 5)]
