from pydantic import Field

from src.models.base import FrozenModel
from src.models.enums.family import Family


class FamilyParams(FrozenModel):
    family: Family
    n: int = Field(ge=1)
    k: int = Field(ge=1)

    def label(self) -> str:
        return f"{self.family.value}_{self.n}^{self.k}"
