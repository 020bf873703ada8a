from enum import StrEnum


class RecordStatus(StrEnum):
    CONSISTENT = "consistent"
    EXPLAINED_BY_EXCEPTION = "explained-by-exception"
    # hypothesis held but the oracle could not run (size cap)
    UNDECIDED = "undecided"
    SKIPPED = "skipped"
    FINDING = "FINDING"
