from src.constants import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR
from src.models.enums.error_status import ErrorStatus
from src.models.error_result import ErrorResult


def exit_code_from_error(error: ErrorResult | None = None) -> int:
    if error:
        match error.status:
            case ErrorStatus.NOT_FOUND_ERROR | ErrorStatus.BAD_REQUEST | ErrorStatus.UNPROCESSABLE:
                return EXIT_INPUT_ERROR
            case ErrorStatus.INTERNAL_ERROR:
                return EXIT_INTERNAL_ERROR
    return EXIT_INTERNAL_ERROR
