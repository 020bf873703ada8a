from enum import StrEnum


class CorpusKind(StrEnum):
    ENUMERATE = "enumerate"
    ENUMERATE_BIPARTITE = "enumerate-bipartite"
    RANDOM = "random"
    RANDOM_BIPARTITE = "random-bipartite"
    GRAPH6 = "graph6"
    FAMILY = "family"


class SamplingModel(StrEnum):
    UNIFORM_EDGE_P = "uniform-edge-p"
    FIXED_MIN_DEGREE = "fixed-min-degree"
