from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator
from pydantic.alias_generators import to_camel


def _to_fraction(value: Any) -> Fraction:  # noqa: ANN401
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"Cannot read {value!r} as an exact rational")


def _fraction_to_str(value: Fraction) -> str:
    return str(value)


# Exact rational serialised as "p/q" (or "p" when integral)
ExactRational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(_fraction_to_str, return_type=str),
]


class BaseModelWithConfig(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, str_strip_whitespace=True)


class FrozenModel(BaseModelWithConfig):
    model_config = ConfigDict(frozen=True)


class ModelList[T: BaseModel](BaseModel):
    items: list[T]
    total: int
