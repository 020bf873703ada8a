from pydantic import Field, computed_field

from src.models.base import BaseModelWithConfig, ExactRational, FrozenModel
from src.models.enums.comparator import Comparator
from src.models.enums.family import Family
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.measure import ComplementKind, Measure
from src.models.enums.setting import Setting


class ExceptionDescriptor(FrozenModel):
    """G ⊆ family_n^k, optionally restricted to k == k_equals or k <= k_max."""

    family: Family
    k_equals: int | None = None
    k_max: int | None = None

    def applies_to(self, k: int) -> bool:
        if self.k_equals is not None and k != self.k_equals:
            return False
        return self.k_max is None or k <= self.k_max

    def describe(self) -> str:
        text = f"G ⊆ {self.family.value}_n^k"
        if self.k_equals is not None:
            text = f"k={self.k_equals}, {text}"
        if self.k_max is not None:
            text = f"{text} (k <= {self.k_max})"
        return text


class ConditionEntry(FrozenModel):
    id: str
    setting: Setting
    measure: Measure
    complement_kind: ComplementKind
    comparator: Comparator
    formula: str
    conclusion: HamiltonicityProperty
    exceptions: tuple[ExceptionDescriptor, ...] = ()
    min_k: int = 1
    # smallest admissible n as a formula in k, e.g. "2*k + 3"
    size_bound: str | None = None
    requires_complement_connected: bool = False
    requires_k_connected: bool = False
    edge_lemma: str | None = None
    bound_lemma: str | None = None
    citation: str
    annotations: tuple[str, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def section(self) -> int:
        return int(self.id[1:].split(".")[0])

    @property
    def is_edge_lemma(self) -> bool:
        return self.measure is Measure.EDGE_COUNT


class BoundLemma(FrozenModel):
    id: str
    setting: Setting
    measure: Measure
    complement_kind: ComplementKind
    comparator: Comparator
    # in n and e = e(G)
    formula: str
    min_n: int = 1
    citation: str


class PolynomialTerm(BaseModelWithConfig):
    n_power: int
    k_power: int
    coefficient: ExactRational


class CatalogEntryDump(ConditionEntry):
    numerator_terms: list[PolynomialTerm] = Field(default_factory=list)
    denominator_terms: list[PolynomialTerm] = Field(default_factory=list)
    derivation_gap: str | None = None


class BoundEvaluation(BaseModelWithConfig):
    lemma_id: str
    n: int
    edge_count: int
    lhs: ExactRational
    rhs: ExactRational
    comparator: Comparator
    satisfied: bool


class ConditionVerdict(BaseModelWithConfig):
    entry_id: str
    k: int
    n: int | None = None
    applicable: bool
    reasons: list[str] = Field(default_factory=list)
    hypothesis_holds: bool
    lhs: ExactRational | None = None
    rhs: ExactRational | None = None
    comparator: Comparator
    conclusion: HamiltonicityProperty
    exceptions: list[ExceptionDescriptor] = Field(default_factory=list)


class EdgeImplication(BaseModelWithConfig):
    """Outcome of replaying a theorem proof's first step on one graph."""

    entry_id: str
    k: int
    premises_hold: bool
    edge_count: int
    edge_threshold: ExactRational | None = None
    implied: bool | None = None
    derivation_gap: str | None = None


class ExceptionMembership(BaseModelWithConfig):
    entry_id: str
    exception: ExceptionDescriptor
    # None when membership could not be decided (range or size cap)
    member: bool | None
    note: str | None = None
