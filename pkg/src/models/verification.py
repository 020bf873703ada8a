from pydantic import Field

from src.constants import DEFAULT_VERIFY_BATCH_SIZE
from src.models.base import BaseModelWithConfig, ExactRational
from src.models.condition import BoundEvaluation, ConditionVerdict, EdgeImplication, ExceptionMembership
from src.models.enums.corpus_kind import CorpusKind, SamplingModel
from src.models.enums.oracle_engine import OracleEngine
from src.models.enums.record_status import RecordStatus
from src.models.family import FamilyParams
from src.models.hamiltonicity import HamiltonicityProfile


class VerificationRecord(BaseModelWithConfig):
    graph_id: str
    x: list[int] | None = Field(default=None, alias="X")
    position: int
    class_tags: list[str]
    order: int
    k: int
    verdicts: list[ConditionVerdict]
    profile: HamiltonicityProfile | None = None
    bound_evaluations: list[BoundEvaluation] = Field(default_factory=list)
    exception_memberships: list[ExceptionMembership] = Field(default_factory=list)
    implications: list[EdgeImplication] = Field(default_factory=list)
    entry_statuses: dict[str, RecordStatus] = Field(default_factory=dict)
    findings: list[str] = Field(default_factory=list)
    annotations: list[str] = Field(default_factory=list)
    status: RecordStatus


class CoverageCount(BaseModelWithConfig):
    entry_id: str
    applicable: int = 0
    hypothesis_holds: int = 0
    consistent: int = 0
    explained: int = 0
    undecided: int = 0
    findings: int = 0
    implication_failures: int = 0


class ClosedFormCheck(BaseModelWithConfig):
    params: FamilyParams
    quantity: str
    formula_value: ExactRational
    computed_value: ExactRational | None
    match: bool
    note: str | None = None


class VerificationReport(BaseModelWithConfig):
    timestamp: str | None = None
    seed: int
    graphs: int
    record_count: int = 0
    skipped_graphs: int = 0
    # full records only when requested; they are streamed to the sink otherwise
    records: list[VerificationRecord] = Field(default_factory=list)
    findings: list[VerificationRecord]
    coverage: list[CoverageCount]
    vacuous_entries: list[str]
    bound_violations: list[BoundEvaluation] = Field(default_factory=list)


class CorpusSpec(BaseModelWithConfig):
    kind: CorpusKind
    n: int | None = None
    parts: tuple[int, int] | None = None
    count: int | None = None
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    model: SamplingModel = SamplingModel.UNIFORM_EDGE_P
    n_max: int | None = None
    min_degree: int = 0
    min_edges: int = 0
    connected_complement: bool = False
    path: str | None = None
    family: FamilyParams | None = None
    seed: int = 0


class VerificationOptions(BaseModelWithConfig):
    entry_ids: list[str]
    k_min: int = Field(default=1, ge=1)
    k_max: int | None = None
    engine: OracleEngine = OracleEngine.BACKTRACKING
    cap: int = Field(default=20, gt=0)
    check_bounds: bool = True
    threads: int = Field(default=1, gt=0)
    seed: int = 0
    include_timestamp: bool = True
    keep_records: bool = False
    batch_size: int = Field(default=DEFAULT_VERIFY_BATCH_SIZE, gt=0)
