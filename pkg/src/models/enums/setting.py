from enum import StrEnum


class Setting(StrEnum):
    BALANCED_BIPARTITE = "balanced-bipartite-2n"
    NEARLY_BALANCED_BIPARTITE = "nearly-balanced-2n-1"
    GENERAL = "general-n"
    K_CONNECTED = "k-connected-n"

    @property
    def is_bipartite(self) -> bool:
        return self in (Setting.BALANCED_BIPARTITE, Setting.NEARLY_BALANCED_BIPARTITE)
