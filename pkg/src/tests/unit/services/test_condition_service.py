from fractions import Fraction

from pytest_mock import MockerFixture
from result import Err, Ok

from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.models.enums.error_status import ErrorStatus
from src.services.condition_service import ConditionService
from src.utils.exceptions import DegenerateOrderError


def test_catalog__selected_entries() -> None:
    # Act
    result = ConditionService().catalog(["T4.2"])

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.total == 1
    dump = result.ok_value.items[0]
    assert dump.id == "T4.2"
    assert dump.section == 4
    assert dump.derivation_gap == "0"
    assert dump.denominator_terms[0].coefficient == Fraction(1)


def test_catalog__unknown_pattern() -> None:
    # Act
    result = ConditionService().catalog(["Z*"])

    # Assert
    assert isinstance(result, Err)
    assert result.err_value.status is ErrorStatus.NOT_FOUND_ERROR


def test_check(k55: BipartiteGraph) -> None:
    # Act
    result = ConditionService().check("L4.1", k55, 1)

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.hypothesis_holds


def test_check__evaluation_error(mocker: MockerFixture, c5: Graph) -> None:
    # Arrange
    mocker.patch("src.services.condition_service.evaluate_condition", side_effect=DegenerateOrderError("n=1"))

    # Act
    result = ConditionService().check("T7.4", c5, 1)

    # Assert
    assert isinstance(result, Err)
    assert result.err_value.details == "n=1"


def test_exceptions(k55: BipartiteGraph) -> None:
    # Act
    result = ConditionService().exceptions("L3.1", k55, 1)

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.total == 2


def test_implication(k55: BipartiteGraph) -> None:
    # Act
    result = ConditionService().implication("T4.2", k55, 1)

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.implied is None


def test_bound_lemmas(c5: Graph) -> None:
    # Act
    result = ConditionService().bound_lemmas(c5)

    # Assert
    assert isinstance(result, Ok)
    assert [b.lemma_id for b in result.ok_value.items] == ["L2.4", "L2.5", "L2.6"]
