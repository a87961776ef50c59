"""Output models: verification reports, census tables and RSK results."""

import json
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from duality.core.exceptions import VerificationFailure

SCHEMA_VERSION = 1

WitnessValue = int | str


class Witness(BaseModel):
    """One instance of a claim: the two sides that must agree."""

    model_config = ConfigDict(frozen=True)

    claim: str = Field(
        ..., description="Claim instance, e.g. 'dim S(2,2) = sum dim(V)^2'"
    )
    left: WitnessValue = Field(..., description="Value computed by the model")
    right: WitnessValue = Field(..., description="Value predicted by the oracle")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.left == self.right


class VerificationReport(BaseModel):
    """Pass/fail record of one theorem check together with its witnesses."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    check: str = Field(..., description="Suite or check name")
    parameters: dict[str, int | str | None] = Field(default_factory=dict)
    witnesses: list[Witness] = Field(default_factory=list)
    notes: list[str] = Field(
        default_factory=list, description="Auxiliary data, e.g. trajectories"
    )
    wall_time: float | None = Field(default=None, ge=0, description="Seconds spent")

    @field_validator("witnesses")
    @classmethod
    def sort_witnesses(cls, witnesses: list[Witness]) -> list[Witness]:
        return sorted(witnesses, key=lambda w: (w.claim, str(w.left), str(w.right)))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> Literal["pass", "fail"]:
        return "pass" if all(w.passed for w in self.witnesses) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failures(self) -> list[Witness]:
        return [w for w in self.witnesses if not w.passed]

    def raise_for_status(self) -> None:
        if not self.passed:
            raise VerificationFailure(self.check, len(self.failures))

    def to_payload(self, include_timings: bool = False) -> dict[str, Any]:
        exclude = None if include_timings else {"wall_time"}
        return self.model_dump(by_alias=True, exclude=exclude)

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_payload(include_timings), sort_keys=True, indent=2)

    def summary(self) -> str:
        timing = f" in {self.wall_time:.3f}s" if self.wall_time is not None else ""
        return (
            f"{self.check}: {self.status.upper()} "
            f"({len(self.witnesses) - len(self.failures)}/{len(self.witnesses)} "
            f"witnesses){timing}"
        )


class ReportBundle(BaseModel):
    """Reports of several suites, in suite-name order."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    reports: list[VerificationReport] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)

    @field_validator("reports")
    @classmethod
    def sort_reports(
        cls, reports: list[VerificationReport]
    ) -> list[VerificationReport]:
        return sorted(reports, key=lambda r: r.check)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> Literal["pass", "fail"]:
        return "pass" if all(r.passed for r in self.reports) else "fail"

    def to_json(self, include_timings: bool = False) -> str:
        payload = {
            "schema": self.schema_version,
            "status": self.status,
            "reports": [r.to_payload(include_timings) for r in self.reports],
        }
        return json.dumps(payload, sort_keys=True, indent=2)


class ComponentRecord(BaseModel):
    """One irreducible component of the full Steinberg-type variety, by its orbit."""

    model_config = ConfigDict(frozen=True)

    matrix: list[list[int]] = Field(..., description="Orbit label A")
    row_weight: list[int] = Field(..., description="Row sums of A (gl_n weight)")
    col_weight: list[int] = Field(..., description="Column sums of A (gl_m weight)")
    dimension: int = Field(..., ge=0, description="Dimension of the component")


class StratumRecord(BaseModel):
    """Orbit-stratum row of a truncated census: nilpotent type and two flag types."""

    model_config = ConfigDict(frozen=True)

    partition: list[int]
    row_type: list[int]
    col_type: list[int]
    dimension: int = Field(..., ge=0)
    components: int = Field(..., ge=0, description="Product of the two Kostka numbers")


class CensusTable(BaseModel):
    """Result of ``census``: components (k >= min(n, m)) or orbit strata (smaller k)."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    d: int = Field(..., ge=0)
    k: int = Field(..., ge=0)
    components: list[ComponentRecord] = Field(default_factory=list)
    strata: list[StratumRecord] = Field(default_factory=list)
    total: int = Field(
        ..., ge=0, description="Number of rows (components or stratum components)"
    )
    expected: int = Field(
        ..., ge=0, description="Independent count of the same quantity"
    )

    model_config = ConfigDict(populate_by_name=True)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def consistent(self) -> bool:
        return self.total == self.expected

    def to_json(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), sort_keys=True, indent=2)

    def to_csv_rows(self) -> list[list[str]]:
        if self.components:
            header = ["matrix", "row_weight", "col_weight", "dimension"]
            body = [
                [
                    json.dumps(c.matrix),
                    json.dumps(c.row_weight),
                    json.dumps(c.col_weight),
                    str(c.dimension),
                ]
                for c in self.components
            ]
        else:
            header = ["partition", "row_type", "col_type", "dimension", "components"]
            body = [
                [
                    json.dumps(s.partition),
                    json.dumps(s.row_type),
                    json.dumps(s.col_type),
                    str(s.dimension),
                    str(s.components),
                ]
                for s in self.strata
            ]
        totals = ["total", str(self.total), "expected", str(self.expected)]
        return [header, *body, totals]


class RSKResult(BaseModel):
    """Output of the ``rsk`` calculator."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    matrix: list[list[int]]
    p: list[list[int]] = Field(..., alias="P")
    q: list[list[int]] = Field(..., alias="Q")
    shape: list[int]

    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), sort_keys=True, indent=2)


class OrbitInvariantResult(BaseModel):
    """Output of the ``orbit-invariant`` calculator."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    matrix: list[list[int]]
    row_type: list[int]
    col_type: list[int]
    invariance_checks: int = Field(default=0, ge=0)
    invariant_under_group: bool | None = None

    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), sort_keys=True, indent=2)
