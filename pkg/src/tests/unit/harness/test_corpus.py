from pathlib import Path

import pytest

from src.graphs.bipartite import BipartiteGraph
from src.harness.corpus import build_corpus, read_graph_lines
from src.models.enums.corpus_kind import CorpusKind
from src.models.enums.family import Family
from src.models.family import FamilyParams
from src.models.verification import CorpusSpec
from src.utils.exceptions import Graph6ParseError, InvalidGraphError


def test_read_graph_lines__skips_blank_and_malformed() -> None:
    # Act
    graphs = list(read_graph_lines(["Bw", "", "~~~", "D?{"]))

    # Assert
    assert [g.n for g in graphs] == [3, 5]


def test_read_graph_lines__strict() -> None:
    # Act / Assert
    with pytest.raises(Graph6ParseError):
        list(read_graph_lines(["Bw", "D?"], skip_malformed=False))


def test_read_graph_lines__bipartite_payload() -> None:
    # Act
    graphs = list(read_graph_lines(['{"graph6": "A_", "X": [0]}']))

    # Assert
    assert isinstance(graphs[0], BipartiteGraph)
    assert graphs[0].x == (0,)


def test_read_graph_lines__malformed_payload_skipped() -> None:
    # Act
    graphs = list(read_graph_lines(['{"X": [0]}']))

    # Assert
    assert graphs == []


def test_build_corpus__graph6_file(tmp_path: Path) -> None:
    # Arrange
    path = tmp_path / "corpus.g6"
    path.write_text(">>graph6<<Bw\nD?{\n", encoding="ascii")

    # Act
    graphs = list(build_corpus(CorpusSpec(kind=CorpusKind.GRAPH6, path=str(path))))

    # Assert
    assert len(graphs) == 2


def test_build_corpus__family() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.FAMILY, family=FamilyParams(family=Family.C, n=7, k=2))

    # Act
    graphs = list(build_corpus(spec))

    # Assert
    assert len(graphs) == 1
    assert graphs[0].n == 13


def test_build_corpus__enumerate_bipartite() -> None:
    # Act
    graphs = list(build_corpus(CorpusSpec(kind=CorpusKind.ENUMERATE_BIPARTITE, parts=(2, 2), min_degree=1)))

    # Assert
    assert len(graphs) == 7


def test_build_corpus__random_is_seeded() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.RANDOM, n=7, count=4, seed=11)

    # Act / Assert
    assert list(build_corpus(spec)) == list(build_corpus(spec))


def test_build_corpus__missing_order() -> None:
    # Act / Assert
    with pytest.raises(InvalidGraphError):
        list(build_corpus(CorpusSpec(kind=CorpusKind.ENUMERATE)))
