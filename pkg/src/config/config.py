from pydantic_settings import BaseSettings

from src.constants import (
    DEFAULT_ORACLE_SIZE_CAP,
    DEFAULT_RETRY_BUDGET,
    DEFAULT_SEED,
    DEFAULT_SUBSET_SEARCH_CAP,
    DEFAULT_VERIFY_BATCH_SIZE,
    ENUMERATION_BIPARTITE_CAP,
    ENUMERATION_GENERAL_CAP,
)


class Config(BaseSettings):
    # Logging configuration
    LOG_FILE_PATH: str = "logs/hamindex.log"
    LOG_LEVEL: str = "WARNING"

    # Oracle guardrails
    ORACLE_SIZE_CAP: int = DEFAULT_ORACLE_SIZE_CAP
    SUBSET_SEARCH_CAP: int = DEFAULT_SUBSET_SEARCH_CAP
    HAMILTON_CONNECTED_PARITY_SHORTCUT: bool = True

    # Corpus generation
    ENUMERATION_GENERAL_CAP: int = ENUMERATION_GENERAL_CAP
    ENUMERATION_BIPARTITE_CAP: int = ENUMERATION_BIPARTITE_CAP
    SAMPLING_RETRY_BUDGET: int = DEFAULT_RETRY_BUDGET

    # Execution
    THREADS: int = 1
    VERIFY_BATCH_SIZE: int = DEFAULT_VERIFY_BATCH_SIZE
    SEED: int = DEFAULT_SEED


config = Config()
