import pytest

from src.models.enums.error_status import ErrorStatus
from src.models.error_result import ErrorResult

pytest_plugins = [
    "src.tests.fixtures.cli_fixtures",
    "src.tests.fixtures.graph_fixtures",
]


@pytest.fixture
def error_result_internal_error() -> ErrorResult:
    return ErrorResult(status=ErrorStatus.INTERNAL_ERROR, details="error")


@pytest.fixture
def error_result_bad_request() -> ErrorResult:
    return ErrorResult(status=ErrorStatus.BAD_REQUEST, details="bad input")
