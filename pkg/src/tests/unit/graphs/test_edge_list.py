import pytest

from src.graphs.edge_list import parse_edge_list
from src.graphs.named import cycle_graph, path_graph
from src.utils.exceptions import InvalidGraphError


def test_parse_edge_list__lines() -> None:
    # Arrange
    text = "# triangle plus tail\n0 1\n1 2\n2 0\n"

    # Act
    g = parse_edge_list(text)

    # Assert
    assert g == cycle_graph(3)


def test_parse_edge_list__inline() -> None:
    # Act
    g = parse_edge_list("0-1,1-2")

    # Assert
    assert g == path_graph(3)


def test_parse_edge_list__header_adds_isolated_vertices() -> None:
    # Act
    g = parse_edge_list("n 5\n0 1\n")

    # Assert
    assert g.n == 5
    assert g.edge_count == 1


def test_parse_edge_list__explicit_order() -> None:
    # Act
    g = parse_edge_list("0 1", n=4)

    # Assert
    assert g.n == 4


@pytest.mark.parametrize("text", ["0 x", "0 1 2", "1 1"])
def test_parse_edge_list__invalid(text: str) -> None:
    # Act / Assert
    with pytest.raises(InvalidGraphError):
        parse_edge_list(text)
