import csv
import json
from typing import IO, Any

from pydantic import BaseModel

from src.models.base import ModelList
from src.models.enums.output_format import OutputFormat


def _flatten(data: Any, prefix: str = "") -> dict[str, str]:  # noqa: ANN401
    """Scalar leaves keyed by dotted path; lists of scalars become space-separated values."""
    if isinstance(data, dict):
        flat: dict[str, str] = {}
        for key in sorted(data):
            flat.update(_flatten(data[key], f"{prefix}.{key}" if prefix else key))
        return flat
    if isinstance(data, list):
        if all(not isinstance(item, dict | list) for item in data):
            return {prefix: " ".join("" if item is None else str(item) for item in data)}
        flat = {}
        for index, item in enumerate(data):
            flat.update(_flatten(item, f"{prefix}.{index}"))
        return flat
    if data is None:
        return {prefix: ""}
    if isinstance(data, bool):
        return {prefix: str(data).lower()}
    return {prefix: str(data)}


def _rows(model: BaseModel) -> list[dict[str, Any]]:
    items = model.items if isinstance(model, ModelList) else [model]
    return [item.model_dump(mode="json", by_alias=True, exclude_none=True) for item in items]


def render(model: BaseModel, fmt: OutputFormat, stream: IO[str]) -> None:
    match fmt:
        case OutputFormat.JSON:
            stream.write(json.dumps(model.model_dump(mode="json", by_alias=True), sort_keys=True, indent=2) + "\n")
        case OutputFormat.PLAIN:
            for index, row in enumerate(_rows(model)):
                if index:
                    stream.write("\n")
                for key, value in _flatten(row).items():
                    stream.write(f"{key}: {value}\n")
        case OutputFormat.CSV:
            rows = [_flatten(row) for row in _rows(model)]
            columns = list(dict.fromkeys(key for row in rows for key in row))
            writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
