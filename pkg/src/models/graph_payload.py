from pydantic import Field

from src.models.base import BaseModelWithConfig


class GraphPayload(BaseModelWithConfig):
    """graph6 line plus the optional bipartite sidecar listing the vertices of part X."""

    graph6: str
    x: list[int] | None = Field(default=None, alias="X")
