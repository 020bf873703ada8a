import logging

from result import Err

from src.models.enums.error_status import ErrorStatus
from src.models.error_result import ErrorResult
from src.utils.exceptions import (
    ClassMismatchError,
    DegenerateOrderError,
    DisconnectedGraphError,
    EmptyGraphError,
    FamilyRangeError,
    Graph6ParseError,
    GraphError,
    InvalidGraphError,
    SizeCapExceededError,
    UnknownEntryError,
    UnsatisfiableFilterError,
)

logger = logging.getLogger(__name__)

_BAD_REQUEST = (InvalidGraphError, Graph6ParseError, FamilyRangeError)
_UNPROCESSABLE = (
    DisconnectedGraphError,
    EmptyGraphError,
    ClassMismatchError,
    DegenerateOrderError,
    SizeCapExceededError,
    UnsatisfiableFilterError,
)


class BaseService:
    @staticmethod
    def _error_response(details: str, status: ErrorStatus) -> ErrorResult:
        return ErrorResult(status=status, details=details)

    @staticmethod
    def status_for(error: GraphError) -> ErrorStatus:
        if isinstance(error, UnknownEntryError):
            return ErrorStatus.NOT_FOUND_ERROR
        if isinstance(error, _BAD_REQUEST):
            return ErrorStatus.BAD_REQUEST
        if isinstance(error, _UNPROCESSABLE):
            return ErrorStatus.UNPROCESSABLE
        return ErrorStatus.INTERNAL_ERROR

    def _from_error(self, error: GraphError) -> Err[ErrorResult]:
        logger.error(f"{type(error).__name__}: {str(error)}")
        return Err(self._error_response(str(error), self.status_for(error)))
