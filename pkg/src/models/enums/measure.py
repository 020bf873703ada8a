from enum import StrEnum


class Measure(StrEnum):
    EDGE_COUNT = "edge_count"
    WIENER = "W"
    HYPER_WIENER = "WW"
    HARARY = "H"


class ComplementKind(StrEnum):
    NONE = "none"
    QUASI_COMPLEMENT = "quasi_complement"
    COMPLEMENT = "complement"
