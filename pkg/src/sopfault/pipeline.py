"""End-to-end runs: expression in, minimized diagnostic test set out.

Timing covers the computational stages (fault enumeration through
redundancy elimination); parsing is excluded so file and inline input time
identically.
"""

import time
from dataclasses import dataclass

from .diagnosing_tree import (
    DiagnosingTree,
    MinimizationReport,
    build_tree,
    eliminate_redundant,
    minimization_report,
)
from .errors import UnknownFaultId
from .fault_model import (
    Fault,
    FaultClass,
    UndetectableReport,
    collapse,
    enumerate_faults,
    faulty_evaluate,
)
from .fault_table import (
    DEFAULT_ROW_CAP,
    FaultDictionary,
    FaultTable,
    build_dictionary,
    dedup,
    detection_matrix,
)
from .sop_parser import SopExpr, assignment_from_index, evaluate


@dataclass(frozen=True)
class PipelineResult:
    expr: SopExpr
    faults: tuple[Fault, ...]
    classes: tuple[FaultClass, ...]
    undetectable: UndetectableReport
    dictionary: FaultDictionary
    table: FaultTable
    tree: DiagnosingTree
    selected: tuple[int, ...]
    minimized: tuple[int, ...]
    report: MinimizationReport


def run_pipeline(expr: SopExpr, row_cap: int = DEFAULT_ROW_CAP) -> PipelineResult:
    started = time.perf_counter()
    faults = enumerate_faults(expr)
    classes, undetectable = collapse(expr, faults)
    dictionary = build_dictionary(expr, classes, row_cap)
    table = dedup(detection_matrix(dictionary))
    tree, selected = build_tree(table)
    minimized = eliminate_redundant(selected, table)
    elapsed = time.perf_counter() - started
    report = minimization_report(table, len(faults), minimized, elapsed)
    return PipelineResult(
        expr=expr,
        faults=tuple(faults),
        classes=tuple(classes),
        undetectable=undetectable,
        dictionary=dictionary,
        table=table,
        tree=tree,
        selected=tuple(selected),
        minimized=tuple(minimized),
        report=report,
    )


@dataclass(frozen=True)
class DiagnosisStep:
    """One tree node visit: the test applied and what the circuit showed."""

    test: int
    bits: tuple[int, ...]
    expected: int
    observed: int
    detection: int


@dataclass(frozen=True)
class Diagnosis:
    steps: tuple[DiagnosisStep, ...]
    column: int
    verdict: str


def diagnose(result: PipelineResult, fault_id: int | None) -> Diagnosis:
    """Walk the tree against a simulated circuit, healthy or with one fault.

    The leaf column is reported as "OK" for the fault-free column or
    "f<class_id>" otherwise. Injecting an undetectable fault legitimately
    ends at OK: no test can tell it apart from the good circuit.
    """
    expr = result.expr
    fault = None
    if fault_id is not None:
        if not 0 <= fault_id < len(result.faults):
            raise UnknownFaultId(
                f"fault id {fault_id} out of range 0..{len(result.faults) - 1}"
            )
        fault = result.faults[fault_id]

    steps: list[DiagnosisStep] = []

    def outcome(test: int) -> int:
        v = assignment_from_index(test, expr.n)
        expected = evaluate(expr, v)
        observed = expected if fault is None else faulty_evaluate(expr, fault, v)
        detection = expected ^ observed
        steps.append(DiagnosisStep(test, v.bits, expected, observed, detection))
        return detection

    column = result.tree.classify(outcome)
    verdict = "OK" if column == 0 else f"f{column - 1}"
    return Diagnosis(tuple(steps), column, verdict)
