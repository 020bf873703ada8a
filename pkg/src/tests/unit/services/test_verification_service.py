from pytest_mock import MockerFixture
from result import Err, Ok

from src.models.enums.corpus_kind import CorpusKind
from src.models.enums.error_status import ErrorStatus
from src.models.verification import CorpusSpec, VerificationOptions
from src.services.verification_service import VerificationService
from src.utils.exceptions import SizeCapExceededError


def _options(*entry_ids: str) -> VerificationOptions:
    return VerificationOptions(entry_ids=list(entry_ids), include_timestamp=False)


def test_verify__enumerated_bipartite_corpus() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.ENUMERATE_BIPARTITE, parts=(3, 3), min_degree=1)

    # Act
    result = VerificationService().verify(spec, _options("L4.1", "T4.*"))

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.findings == []
    assert result.ok_value.bound_violations == []
    assert [c.entry_id for c in result.ok_value.coverage] == ["L4.1", "T4.2", "T4.3", "T4.4"]


def test_verify__corpus_error(mocker: MockerFixture) -> None:
    # Arrange
    mocker.patch(
        "src.services.verification_service.build_corpus",
        side_effect=SizeCapExceededError("Labeled graph enumeration", 9, 7),
    )

    # Act
    result = VerificationService().verify(CorpusSpec(kind=CorpusKind.ENUMERATE, n=9), _options("L7.1"))

    # Assert
    assert isinstance(result, Err)
    assert result.err_value.status is ErrorStatus.UNPROCESSABLE


def test_verify__unknown_entry() -> None:
    # Act
    result = VerificationService().verify([], _options("Q1.1"))

    # Assert
    assert isinstance(result, Err)
    assert result.err_value.status is ErrorStatus.NOT_FOUND_ERROR


def test_closed_forms() -> None:
    # Act
    result = VerificationService().closed_forms(n_max=6, k_max=1)

    # Assert
    assert isinstance(result, Ok)
    assert result.ok_value.total == len(result.ok_value.items) > 0
