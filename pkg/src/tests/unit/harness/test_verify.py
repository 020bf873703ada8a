from collections.abc import Iterator
from fractions import Fraction
import io
from typing import Any

import pytest
from pytest_mock import MockerFixture

from src.conditions.catalog import get_entry
from src.conditions.facts import GraphFacts
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.named import complete_graph
from src.harness.corpus import build_corpus
from src.harness.verify import default_k_values, verify_corpus, verify_graph
from src.models.condition import ConditionVerdict, EdgeImplication
from src.models.enums.comparator import Comparator
from src.models.enums.corpus_kind import CorpusKind
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.oracle_engine import OracleEngine
from src.models.enums.record_status import RecordStatus
from src.models.hamiltonicity import HamiltonicityProfile
from src.models.verification import CorpusSpec, VerificationOptions
from src.utils.exceptions import DisconnectedGraphError


def _options(
    *entry_ids: str,
    k: int | None = None,
    check_bounds: bool = False,
    engine: OracleEngine = OracleEngine.BACKTRACKING,
    **extra: Any,
) -> VerificationOptions:
    return VerificationOptions(
        entry_ids=list(entry_ids),
        engine=engine,
        k_min=k or 1,
        k_max=k,
        check_bounds=check_bounds,
        include_timestamp=False,
        keep_records=True,
        **extra,
    )


def test_default_k_values(k55: BipartiteGraph) -> None:
    # Act
    values = default_k_values(get_entry("L4.1"), GraphFacts(k55))

    # Assert
    assert values == [1]


def test_default_k_values__class_mismatch(c6: Graph) -> None:
    # Act / Assert
    assert default_k_values(get_entry("L4.1"), GraphFacts(c6)) == []


def test_verify_corpus__consistent(k55: BipartiteGraph) -> None:
    # Act
    report = verify_corpus([k55], _options("L4.1"))

    # Assert
    assert report.graphs == 1
    assert report.record_count == 1
    assert report.timestamp is None
    assert report.findings == []
    assert [r.status for r in report.records] == [RecordStatus.CONSISTENT]
    record = report.records[0]
    assert record.k == 1
    assert record.x == [0, 1, 2, 3, 4]
    assert "balanced" in record.class_tags
    assert record.profile is not None
    assert record.profile.hamiltonian
    assert record.entry_statuses == {"L4.1": RecordStatus.CONSISTENT}
    coverage = report.coverage[0]
    assert (coverage.applicable, coverage.hypothesis_holds, coverage.consistent) == (1, 1, 1)
    assert report.vacuous_entries == []


def test_verify_corpus__failure_explained_by_exception(c_7_2: BipartiteGraph) -> None:
    # Act
    report = verify_corpus([c_7_2], _options("L5.1", k=2, engine=OracleEngine.HELD_KARP))

    # Assert
    assert report.findings == []
    record = report.records[0]
    assert record.status is RecordStatus.EXPLAINED_BY_EXCEPTION
    assert record.exception_memberships[0].member
    assert record.profile is not None
    assert not record.profile.traceable
    assert report.coverage[0].explained == 1


def test_verify_corpus__oracle_refutation_is_a_finding(mocker: MockerFixture, k55: BipartiteGraph) -> None:
    # Arrange
    mocker.patch(
        "src.harness.verify.hamiltonicity_profile",
        return_value=HamiltonicityProfile(
            hamiltonian=False,
            traceable=True,
            hamilton_connected=False,
            traceable_from_every_vertex=True,
            engine=OracleEngine.BACKTRACKING,
        ),
    )

    # Act
    report = verify_corpus([k55], _options("L4.1"))

    # Assert
    assert len(report.findings) == 1
    assert report.findings[0].status is RecordStatus.FINDING
    assert report.findings[0].findings == ["L4.1 at k=1: hamiltonian refuted by the oracle"]
    assert report.coverage[0].findings == 1


def test_verify_corpus__oracle_over_cap_is_undecided(k55: BipartiteGraph) -> None:
    # Act
    report = verify_corpus([k55], _options("L4.1", cap=5))

    # Assert
    record = report.records[0]
    assert record.status is RecordStatus.UNDECIDED
    assert record.entry_statuses == {"L4.1": RecordStatus.UNDECIDED}
    assert any(a.startswith("oracle skipped") for a in record.annotations)
    coverage = report.coverage[0]
    assert (coverage.hypothesis_holds, coverage.undecided, coverage.consistent) == (1, 1, 0)
    assert report.findings == []


def test_verify_corpus__implication_checked_whatever_the_gap(mocker: MockerFixture) -> None:
    # Arrange
    mocker.patch(
        "src.harness.verify.evaluate_condition",
        return_value=ConditionVerdict(
            entry_id="T7.2",
            k=1,
            n=11,
            applicable=True,
            hypothesis_holds=True,
            lhs=Fraction(500),
            rhs=Fraction(470),
            comparator=Comparator.GT,
            conclusion=HamiltonicityProperty.HAMILTONIAN,
        ),
    )
    implied = mocker.patch(
        "src.harness.verify.implied_edge_inequality",
        return_value=EdgeImplication(
            entry_id="T7.2",
            k=1,
            premises_hold=True,
            edge_count=30,
            edge_threshold=Fraction(37),
            implied=False,
            derivation_gap="5*n",
        ),
    )

    # Act
    report = verify_corpus([complete_graph(11)], _options("T7.2", k=1))

    # Assert
    implied.assert_called_once()
    record = report.records[0]
    assert record.implications[0].implied is False
    assert any("derivation gap 5*n" in a for a in record.annotations)
    assert record.status is RecordStatus.CONSISTENT
    assert report.coverage[0].implication_failures == 1
    assert report.findings == []


def test_verify_graph__sweep_error_gives_a_skipped_record(mocker: MockerFixture, k55: BipartiteGraph) -> None:
    # Arrange
    mocker.patch("src.harness.verify.default_k_values", side_effect=DisconnectedGraphError("complement split"))

    # Act
    report = verify_corpus([k55], _options("L4.1"))

    # Assert
    assert report.skipped_graphs == 1
    record = report.records[0]
    assert record.status is RecordStatus.SKIPPED
    assert record.annotations == ["skipped: complement split"]


def test_verify_corpus__vacuous_entries(c6: Graph) -> None:
    # Act
    report = verify_corpus([c6], _options("T4.*"))

    # Assert
    assert report.records == []
    assert report.vacuous_entries == ["T4.2", "T4.3", "T4.4"]


def test_verify_corpus__empty_corpus() -> None:
    # Act
    report = verify_corpus([], _options("L4.1"))

    # Assert
    assert report.graphs == 0
    assert report.records == []
    assert report.vacuous_entries == ["L4.1"]


def test_verify_corpus__records_stream_to_the_sink_only(k55: BipartiteGraph, k33: BipartiteGraph) -> None:
    # Arrange
    sink = io.StringIO()
    options = _options("L4.1").model_copy(update={"keep_records": False})

    # Act
    report = verify_corpus([k55, k33], options, sink)

    # Assert
    assert report.records == []
    assert report.record_count == 2
    assert len(sink.getvalue().splitlines()) == 2


def test_verify_corpus__pulls_the_corpus_one_batch_at_a_time(k55: BipartiteGraph) -> None:
    # Arrange
    pulled = 0
    pulled_at_first_write: list[int] = []

    def corpus() -> Iterator[BipartiteGraph]:
        nonlocal pulled
        for _ in range(6):
            pulled += 1
            yield k55

    class Sink(io.StringIO):
        def write(self, text: str) -> int:
            if not pulled_at_first_write:
                pulled_at_first_write.append(pulled)
            return super().write(text)

    # Act
    report = verify_corpus(corpus(), _options("L4.1", batch_size=2), Sink())

    # Assert
    assert report.graphs == 6
    assert pulled_at_first_write == [2]


def test_verify_graph__bound_lemmas_without_entries(c5: Graph) -> None:
    # Act
    records = verify_graph(c5, 0, _options("L4.1", check_bounds=True))

    # Assert
    assert len(records) == 1
    assert records[0].k == 0
    assert [b.lemma_id for b in records[0].bound_evaluations] == ["L2.4", "L2.5", "L2.6"]
    assert all(b.satisfied for b in records[0].bound_evaluations)


def test_verify_corpus__timestamp(k55: BipartiteGraph) -> None:
    # Arrange
    options = _options("L4.1").model_copy(update={"include_timestamp": True})

    # Act
    report = verify_corpus([k55], options)

    # Assert
    assert report.timestamp is not None
    assert report.timestamp.endswith("+00:00")


def test_verify_corpus__output_is_deterministic() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.RANDOM_BIPARTITE, parts=(4, 4), count=30, seed=7, min_degree=1)
    first, second = io.StringIO(), io.StringIO()

    # Act
    verify_corpus(build_corpus(spec), _options("L4.1", "T4.*", check_bounds=True), first)
    verify_corpus(build_corpus(spec), _options("L4.1", "T4.*", check_bounds=True), second)

    # Assert
    assert first.getvalue()
    assert first.getvalue() == second.getvalue()


@pytest.mark.slow
def test_verify_corpus__worker_pool_keeps_corpus_order() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.ENUMERATE_BIPARTITE, parts=(3, 3), min_degree=1)
    serial, pooled = io.StringIO(), io.StringIO()

    # Act
    verify_corpus(build_corpus(spec), _options("L4.1", "T4.*", check_bounds=True), serial)
    verify_corpus(build_corpus(spec), _options("L4.1", "T4.*", check_bounds=True, threads=2, batch_size=64), pooled)

    # Assert
    assert serial.getvalue() == pooled.getvalue()


def test_verify_corpus__nearly_balanced_parts_are_oriented() -> None:
    # Arrange
    spec = CorpusSpec(kind=CorpusKind.ENUMERATE_BIPARTITE, parts=(2, 3), min_degree=1, min_edges=6)

    # Act
    report = verify_corpus(build_corpus(spec), _options("L5.1"))

    # Assert
    assert report.graphs == 1
    assert report.records[0].x == [0, 1, 2]
    assert report.coverage[0].applicable == 1
