"""Request and response models for the HTTP API.

These are the wire contract: the CLI validates its payloads against the
same models whether it dispatches in-process or talks to a remote server.
"""

from typing import Literal

from pydantic import BaseModel, Field


class CircuitRequest(BaseModel):
    """Expression text, inline or full .sop file content ('#' comments ok)."""

    expression: str
    max_vars: int | None = Field(default=None, ge=1, le=26)


class FaultInfo(BaseModel):
    fault_id: int
    site: str
    stuck_value: int = Field(ge=0, le=1)
    class_id: int | None = None


class ClassInfo(BaseModel):
    class_id: int
    representative: int
    members: list[int]
    sites: list[str]


class FaultsResponse(BaseModel):
    expression: str
    variables: list[str]
    n: int
    fault_count: int
    class_count: int
    faults: list[FaultInfo]
    classes: list[ClassInfo]
    undetectable: list[int]


class DictRequest(CircuitRequest):
    format: Literal["json", "csv"] = "json"


class DictResponse(BaseModel):
    n: int
    row_count: int
    class_count: int
    header: list[str]
    surviving_tests: list[int]
    row_groups: dict[int, list[int]]
    column_groups: dict[int, list[int]]
    rows: list[list[int]] | None = None
    csv: str | None = None


class MinimizeRequest(CircuitRequest):
    include_timing: bool = False


class TestVector(BaseModel):
    row: int
    bits: list[int]


class MinimizeResponse(BaseModel):
    expression: str
    n: int
    total_tests: int
    raw_faults: int
    fault_classes: int
    undetectable: list[int]
    selected: list[int]
    minimized_tests: int
    final_tests: list[TestVector]
    minimization_percent: float
    minimization_percent_display: str
    elapsed_seconds: float | None = None


class TreeRequest(CircuitRequest):
    format: Literal["json", "dot", "ascii"] = "dot"


class TreeNodeInfo(BaseModel):
    node_id: int
    kind: Literal["test", "leaf"]
    label: str
    test: int | None = None
    zero: int | None = None
    one: int | None = None


class TreeResponse(BaseModel):
    n: int
    root: int
    depth: int
    min_levels: int
    leaf_count: int
    selected: list[int]
    nodes: list[TreeNodeInfo] | None = None
    dot: str | None = None
    ascii_art: str | None = None


class SimulateRequest(CircuitRequest):
    fault_id: int | None = None


class SimulateStep(BaseModel):
    test: int
    bits: list[int]
    expected: int
    observed: int
    detection: int


class SimulateResponse(BaseModel):
    injected: int | None
    injected_site: str | None
    steps: list[SimulateStep]
    verdict: str
    class_id: int | None
    class_members: list[int]


class OracleLimitsModel(BaseModel):
    max_rows: int = Field(default=24, ge=1)
    max_columns: int = Field(default=16, ge=1)
    max_subset_size: int = Field(default=12, ge=1)


class VerifyRequest(CircuitRequest):
    limits: OracleLimitsModel = OracleLimitsModel()


class VerifyResponse(BaseModel):
    heuristic_tests: list[int]
    heuristic_size: int
    oracle_tests: list[int]
    oracle_size: int
    gap: int
    heuristic_valid: bool
    ok: bool


class GenRequest(BaseModel):
    seed: int
    n_vars: int = Field(ge=1, le=26)
    term_count: int = Field(ge=1)
    min_literals: int = Field(default=1, ge=1)
    max_literals: int | None = Field(default=None, ge=1)


class GenResponse(BaseModel):
    expression: str
    sop_text: str


class BenchCircuit(BaseModel):
    name: str
    expression: str


class BenchRequest(BaseModel):
    circuits: list[BenchCircuit]
    max_vars: int | None = Field(default=None, ge=1, le=26)
    jobs: int = Field(default=1, ge=1)


class BenchRowModel(BaseModel):
    circuit: str
    n: int
    total_tests: int
    raw_faults: int
    fault_classes: int
    minimized_tests: int
    elapsed_seconds: float
    minimization_percent: str


class BenchResponse(BaseModel):
    rows: list[BenchRowModel]
    csv: str


class HealthResponse(BaseModel):
    status: str
    version: str


class ErrorResponse(BaseModel):
    error: str
    detail: str
