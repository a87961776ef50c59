"""Input models for the JSON documents accepted by the CLI calculators."""

from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic_core import PydanticCustomError
from sympy import Rational

RationalEntry = int | str


def _check_rational(value: RationalEntry) -> RationalEntry:
    if isinstance(value, int):
        return value
    try:
        parsed = Rational(value.strip())
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc
    if not parsed.is_Rational:
        raise ValueError(f"not a rational number: {value!r}")
    return value


class FlagSpec(BaseModel):
    """A flag in Q^d written as spanning vectors of each step F_1, ..., F_n.

    ``steps[i]`` spans F_{i+1}. Vectors are lists of integers or ``"p/q"``
    strings. ``type``, when present, must match the step dimensions.
    """

    d: int = Field(..., ge=1, description="Ambient dimension")
    steps: list[list[list[RationalEntry]]] = Field(..., min_length=1)
    type: list[int] | None = Field(
        default=None, description="Optional expected flag type"
    )

    @field_validator("steps")
    @classmethod
    def check_entries(
        cls, steps: list[list[list[RationalEntry]]]
    ) -> list[list[list[RationalEntry]]]:
        for step, space in enumerate(steps, start=1):
            for vector in space:
                for value in vector:
                    try:
                        _check_rational(value)
                    except ValueError as exc:
                        raise PydanticCustomError(
                            "rational_entry",
                            "{reason}",
                            {"step": step, "reason": str(exc)},
                        ) from exc
        return steps

    @model_validator(mode="after")
    def check_vector_lengths(self) -> "FlagSpec":
        for step, space in enumerate(self.steps, start=1):
            for vector in space:
                if len(vector) != self.d:
                    raise PydanticCustomError(
                        "vector_length",
                        "vector of length {length} in Q^{d}",
                        {"step": step, "length": len(vector), "d": self.d},
                    )
        return self

    @classmethod
    def from_vectors(
        cls, d: int, steps: Sequence[Sequence[Sequence[RationalEntry]]]
    ) -> "FlagSpec":
        return cls(d=d, steps=[[list(v) for v in space] for space in steps])


class FlagPairFile(BaseModel):
    """Document read by ``orbit-invariant``."""

    first: FlagSpec
    second: FlagSpec


class TableauPair(BaseModel):
    """Input of ``rsk --inverse``: a pair of tableaux and optional matrix bounds."""

    model_config = ConfigDict(populate_by_name=True)

    p: list[list[int]] = Field(..., alias="P")
    q: list[list[int]] = Field(..., alias="Q")
    n: int | None = Field(default=None, ge=1)
    m: int | None = Field(default=None, ge=1)
