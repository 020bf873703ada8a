from enum import StrEnum


class Family(StrEnum):
    B = "B"
    C = "C"
    R = "R"
    Q = "Q"
    L = "L"
    N = "N"
    L_UNDER = "L_under"
    N_UNDER = "N_under"

    @property
    def is_bipartite(self) -> bool:
        return self in (Family.B, Family.C, Family.R, Family.Q)
