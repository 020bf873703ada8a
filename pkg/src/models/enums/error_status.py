from enum import StrEnum


class ErrorStatus(StrEnum):
    NOT_FOUND_ERROR = "NotFound"
    BAD_REQUEST = "BadRequest"
    UNPROCESSABLE = "Unprocessable"
    INTERNAL_ERROR = "InternalError"
