from enum import StrEnum


class OracleEngine(StrEnum):
    BACKTRACKING = "backtracking"
    HELD_KARP = "held_karp"
