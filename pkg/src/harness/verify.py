from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from datetime import UTC, datetime
from functools import partial
from itertools import batched
import logging
from typing import IO, Any

from src.conditions.catalog import get_entry, min_order, select_entries
from src.conditions.derivation import implied_edge_inequality
from src.conditions.evaluator import (
    applicable_bound_lemmas,
    evaluate_bound_lemma,
    evaluate_condition,
    exceptions_matching,
    setting_order,
)
from src.conditions.facts import GraphFacts
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.graphs.graph6 import encode_graph6
from src.hamiltonicity.oracle import hamiltonicity_profile
from src.harness.reports import to_json_line
from src.models.condition import (
    BoundEvaluation,
    ConditionEntry,
    ConditionVerdict,
    EdgeImplication,
    ExceptionMembership,
)
from src.models.enums.record_status import RecordStatus
from src.models.enums.setting import Setting
from src.models.hamiltonicity import HamiltonicityProfile
from src.models.verification import CoverageCount, VerificationOptions, VerificationRecord, VerificationReport
from src.utils.exceptions import GraphError

logger = logging.getLogger(__name__)


def default_k_values(entry: ConditionEntry, facts: GraphFacts, k_min: int = 1, k_max: int | None = None) -> list[int]:
    """k sweep for one entry: delta(G) >= k (kappa >= k for connectivity entries) and the size bound satisfiable."""
    if facts.graph.n == 0:
        return []
    n, mismatch = setting_order(entry.setting, facts)
    if mismatch is not None or n is None:
        return []
    if entry.setting is Setting.K_CONNECTED:
        top = min(facts.vertex_connectivity, n - 1)
    else:
        top = facts.min_degree
    if k_max is not None:
        top = min(top, k_max)
    values = []
    for k in range(max(k_min, entry.min_k), top + 1):
        bound = min_order(entry, k)
        if bound is None or n >= bound:
            values.append(k)
    return values


def _class_tags(g: Graph | BipartiteGraph) -> list[str]:
    if not isinstance(g, BipartiteGraph):
        return ["general"]
    a, b = g.part_sizes()
    tags = ["bipartite", f"parts={a},{b}"]
    if g.is_balanced():
        tags.append("balanced")
    elif g.is_nearly_balanced():
        tags.append("nearly-balanced")
    return tags


_STATUS_PRECEDENCE = (RecordStatus.FINDING, RecordStatus.UNDECIDED, RecordStatus.EXPLAINED_BY_EXCEPTION)


class _GraphRun:
    """Verification of one corpus graph; the oracle profile is computed at most once."""

    def __init__(self, g: Graph | BipartiteGraph, position: int, options: VerificationOptions) -> None:
        self.g = g
        self.position = position
        self.options = options
        self.facts = GraphFacts(g)
        self.graph_id = encode_graph6(g)
        self._profile: HamiltonicityProfile | None = None
        self._profiled = False
        self.annotations: list[str] = []

    def profile(self) -> HamiltonicityProfile | None:
        if not self._profiled:
            self._profiled = True
            try:
                self._profile = hamiltonicity_profile(self.g, self.options.engine, self.options.cap)
            except GraphError as e:
                self.annotations.append(f"oracle skipped: {e}")
        return self._profile

    def bound_evaluations(self) -> list[BoundEvaluation]:
        evaluations = []
        for lemma_id in applicable_bound_lemmas(self.facts):
            try:
                evaluations.append(evaluate_bound_lemma(lemma_id, self.facts))
            except GraphError as e:
                self.annotations.append(f"{lemma_id} skipped: {e}")
        return evaluations

    def _check_verdict(
        self,
        verdict: ConditionVerdict,
        memberships: list[ExceptionMembership],
        implications: list[EdgeImplication],
        findings: list[str],
    ) -> RecordStatus:
        if not (verdict.applicable and verdict.hypothesis_holds):
            return RecordStatus.CONSISTENT
        entry = get_entry(verdict.entry_id)
        if entry.bound_lemma is not None:
            implication = implied_edge_inequality(entry.id, self.facts, verdict.k)
            implications.append(implication)
            if implication.implied is False:
                self.annotations.append(
                    f"{entry.id} at k={verdict.k}: hypothesis and {entry.bound_lemma} hold but "
                    f"e(G)={implication.edge_count} <= {implication.edge_threshold}, "
                    f"derivation gap {implication.derivation_gap}"
                )
                logger.warning(f"Implication gap {entry.id} k={verdict.k} on {self.graph_id}")
        profile = self.profile()
        if profile is None:
            return RecordStatus.UNDECIDED
        if profile.holds(verdict.conclusion):
            return RecordStatus.CONSISTENT
        matched = exceptions_matching(entry.id, self.facts, verdict.k)
        memberships.extend(matched)
        if any(m.member for m in matched):
            return RecordStatus.EXPLAINED_BY_EXCEPTION
        if any(m.member is None for m in matched):
            self.annotations.append(f"{entry.id} at k={verdict.k}: exception membership undecided")
        findings.append(f"{entry.id} at k={verdict.k}: {verdict.conclusion.value} refuted by the oracle")
        logger.warning(f"FINDING {entry.id} k={verdict.k} on {self.graph_id}")
        return RecordStatus.FINDING

    def _record(self, k: int, **fields: Any) -> VerificationRecord:  # noqa: ANN401
        return VerificationRecord(
            graph_id=self.graph_id,
            x=list(self.g.x) if isinstance(self.g, BipartiteGraph) else None,
            position=self.position,
            class_tags=_class_tags(self.g),
            order=self.g.n,
            k=k,
            **fields,
        )

    def record(self, k: int, entries: list[ConditionEntry], bounds: list[BoundEvaluation]) -> VerificationRecord:
        verdicts = [evaluate_condition(entry.id, self.facts, k) for entry in entries]
        memberships: list[ExceptionMembership] = []
        implications: list[EdgeImplication] = []
        findings = [f"{b.lemma_id} violated" for b in bounds if not b.satisfied]
        statuses = {v.entry_id: self._check_verdict(v, memberships, implications, findings) for v in verdicts}
        status = next((s for s in _STATUS_PRECEDENCE if s in statuses.values()), RecordStatus.CONSISTENT)
        holding = any(v.applicable and v.hypothesis_holds for v in verdicts)
        return self._record(
            k,
            verdicts=verdicts,
            profile=self._profile if holding else None,
            bound_evaluations=bounds,
            exception_memberships=memberships,
            implications=implications,
            entry_statuses={v.entry_id: statuses[v.entry_id] for v in verdicts if v.applicable and v.hypothesis_holds},
            findings=findings,
            annotations=list(self.annotations),
            status=status,
        )

    def skipped(self, k: int, reason: str) -> VerificationRecord:
        annotations = [*self.annotations, f"skipped: {reason}"]
        return self._record(k, verdicts=[], annotations=annotations, status=RecordStatus.SKIPPED)


def verify_graph(g: Graph | BipartiteGraph, position: int, options: VerificationOptions) -> list[VerificationRecord]:
    """One record per k tested on g; bound-lemma evaluations ride on the first record."""
    run = _GraphRun(g, position, options)
    entries = [get_entry(entry_id) for entry_id in options.entry_ids]
    try:
        sweeps = {entry.id: default_k_values(entry, run.facts, options.k_min, options.k_max) for entry in entries}
        bounds = run.bound_evaluations() if options.check_bounds else []
    except GraphError as e:
        logger.warning(f"Graph {run.graph_id} at position {position} skipped, {str(e)}")
        return [run.skipped(0, str(e))]
    ks = sorted({k for values in sweeps.values() for k in values})
    if not ks:
        return [run.record(0, [], bounds)] if bounds else []
    records = []
    for index, k in enumerate(ks):
        tested = [entry for entry in entries if k in sweeps[entry.id]]
        try:
            records.append(run.record(k, tested, bounds if index == 0 else []))
        except GraphError as e:
            logger.warning(f"Graph {run.graph_id} at k={k} skipped, {str(e)}")
            records.append(run.skipped(k, str(e)))
    return records


def _verify_item(item: tuple[int, Graph | BipartiteGraph], options: VerificationOptions) -> list[VerificationRecord]:
    position, g = item
    return verify_graph(g, position, options)


def _record_batches(
    corpus: Iterable[Graph | BipartiteGraph], options: VerificationOptions
) -> Iterator[list[VerificationRecord]]:
    """Per-graph record lists in corpus order; at most one batch of graphs is held at a time."""
    work = partial(_verify_item, options=options)
    batches = batched(enumerate(corpus), options.batch_size)
    if options.threads == 1:
        for batch in batches:
            yield from map(work, batch)
        return
    with ProcessPoolExecutor(max_workers=options.threads) as executor:
        for batch in batches:
            yield from executor.map(work, batch, chunksize=max(1, len(batch) // (4 * options.threads)))


class _Tally:
    """Running totals of a verification run."""

    def __init__(self, entry_ids: list[str], options: VerificationOptions, sink: IO[str] | None) -> None:
        self.coverage = {entry_id: CoverageCount(entry_id=entry_id) for entry_id in entry_ids}
        self.keep_records = options.keep_records
        self.sink = sink
        self.graphs = 0
        self.skipped_graphs = 0
        self.record_count = 0
        self.records: list[VerificationRecord] = []
        self.findings: list[VerificationRecord] = []
        self.bound_violations: list[BoundEvaluation] = []

    def _count(self, record: VerificationRecord) -> None:
        for verdict in record.verdicts:
            count = self.coverage[verdict.entry_id]
            if not verdict.applicable:
                continue
            count.applicable += 1
            if not verdict.hypothesis_holds:
                continue
            count.hypothesis_holds += 1
            match record.entry_statuses.get(verdict.entry_id):
                case RecordStatus.FINDING:
                    count.findings += 1
                case RecordStatus.EXPLAINED_BY_EXCEPTION:
                    count.explained += 1
                case RecordStatus.UNDECIDED:
                    count.undecided += 1
                case _:
                    count.consistent += 1
        for implication in record.implications:
            if implication.implied is False:
                self.coverage[implication.entry_id].implication_failures += 1

    def add(self, records: list[VerificationRecord]) -> None:
        self.graphs += 1
        if any(record.status is RecordStatus.SKIPPED for record in records):
            self.skipped_graphs += 1
        for record in records:
            self.record_count += 1
            self._count(record)
            if self.sink is not None:
                self.sink.write(to_json_line(record) + "\n")
            if self.keep_records:
                self.records.append(record)
            if record.status is RecordStatus.FINDING or record.findings:
                self.findings.append(record)
            self.bound_violations.extend(b for b in record.bound_evaluations if not b.satisfied)


def verify_corpus(
    corpus: Iterable[Graph | BipartiteGraph], options: VerificationOptions, sink: IO[str] | None = None
) -> VerificationReport:
    """Verify every corpus graph; records stream to sink as they are produced, only counts and findings stay."""
    entry_ids = [entry.id for entry in select_entries(options.entry_ids)]
    options = options.model_copy(update={"entry_ids": entry_ids})
    logger.info(f"Verifying against {len(entry_ids)} entries with {options.threads} workers")
    tally = _Tally(entry_ids, options, sink)
    for records in _record_batches(corpus, options):
        tally.add(records)
    coverage = list(tally.coverage.values())
    report = VerificationReport(
        timestamp=datetime.now(UTC).isoformat() if options.include_timestamp else None,
        seed=options.seed,
        graphs=tally.graphs,
        record_count=tally.record_count,
        skipped_graphs=tally.skipped_graphs,
        records=tally.records,
        findings=tally.findings,
        coverage=coverage,
        vacuous_entries=[c.entry_id for c in coverage if c.hypothesis_holds == 0],
        bound_violations=tally.bound_violations,
    )
    logger.info(
        f"Verified {tally.graphs} graphs: {tally.record_count} records, {len(report.findings)} with findings, "
        f"{len(report.vacuous_entries)} vacuous entries"
    )
    return report
