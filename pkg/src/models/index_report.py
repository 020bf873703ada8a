from pydantic import computed_field

from src.models.base import BaseModelWithConfig, ExactRational


class IndexReport(BaseModelWithConfig):
    n: int
    connected: bool
    wiener: int
    hyper_wiener: int
    harary: ExactRational
    transmissions: list[int]
    squared_transmissions: list[int]
    reciprocal_transmissions: list[ExactRational]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def harary_float(self) -> float:
        return float(self.harary)
