from collections.abc import Iterable
import csv
import json
from pathlib import Path
from typing import IO

from pydantic import BaseModel

from src.constants import SUMMARY_COLUMNS
from src.models.verification import CoverageCount, VerificationReport


def to_json_line(model: BaseModel) -> str:
    """Canonical single-line JSON: camelCase aliases, sorted keys."""
    return json.dumps(model.model_dump(mode="json", by_alias=True), sort_keys=True)


def write_summary(coverage: Iterable[CoverageCount], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for count in coverage:
        writer.writerow([getattr(count, column) for column in SUMMARY_COLUMNS])


def write_summary_file(report: VerificationReport, summary_path: str | None) -> None:
    if summary_path is not None:
        with Path(summary_path).open("w", encoding="utf-8", newline="") as stream:
            write_summary(report.coverage, stream)


def summary_lines(report: VerificationReport) -> list[str]:
    """Plain-text projection of the run summary."""
    lines = [
        f"graphs: {report.graphs}",
        f"records: {report.record_count}",
        f"skipped graphs: {report.skipped_graphs}",
        f"findings: {len(report.findings)}",
        f"bound violations: {len(report.bound_violations)}",
    ]
    for count in report.coverage:
        lines.append(
            f"{count.entry_id}: applicable={count.applicable} holds={count.hypothesis_holds} "
            f"consistent={count.consistent} explained={count.explained} undecided={count.undecided} "
            f"findings={count.findings} implication-failures={count.implication_failures}"
        )
    if report.vacuous_entries:
        lines.append(f"vacuous: {', '.join(report.vacuous_entries)}")
    return lines
