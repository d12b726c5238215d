"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ModelDoc(BaseModel):
    """Explicit relational model, mirroring the JSON file format."""

    model_config = ConfigDict(extra="forbid")

    vars: list[str]
    states: dict[str, list[list[dict[str, int]]]]
    order: list[tuple[str, str]] = Field(default_factory=list)

    def as_document(self) -> dict:
        return {
            "vars": self.vars,
            "states": self.states,
            "order": [list(p) for p in self.order],
        }


class EvalRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vars: list[str]
    team: str = ""
    formula: str
    engine: Literal["generic", "flat", "oracle"] = "generic"


class EvalResponse(BaseModel):
    result: bool


class EntailRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: ModelDoc
    antecedent: str
    consequent: str
    engine: Literal["direct", "oracle"] = "direct"
    logic: Literal["pdl", "tpl"] = "pdl"
    verify: bool = False


class EntailResponse(BaseModel):
    result: bool
    violating_state: Optional[str] = None
    verify_warnings: list[str] = Field(default_factory=list)


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: ModelDoc
    mode: Literal["universe", "all-subsets"] = "universe"
    universe: Optional[list[str]] = None
    strong: bool = False


class WitnessOut(BaseModel):
    subject: str
    states: list[str]
    detail: str


class VerifyResponse(BaseModel):
    prop: str
    passed: bool
    witnesses: list[WitnessOut]
    notes: list[str]


class SystemCRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: ModelDoc
    universe: list[str]
    logic: Literal["pdl", "tpl"] = "pdl"
    close_depth: int = 0


class SystemCResponse(BaseModel):
    passed: bool
    violations: list[str]
    universe: list[str]


class SuccEntailRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vars: list[str]
    state_bits: int
    label_circuit: str
    order_circuit: str
    antecedent: str
    consequent: str
    verify: bool = False


class BenchRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    logic: Literal["tpl", "pdl"] = "tpl"
    max_team_size: int = 16
    trials: int = 7
    seed: int = 0
    family: Literal["random", "split-hard"] = "random"


class BenchRowOut(BaseModel):
    logic: str
    team_size: int
    formula_size: int
    median_ns: int


class BenchResponse(BaseModel):
    rows: list[BenchRowOut]
    cases_digest: str


class HealthResponse(BaseModel):
    status: str
    version: str
