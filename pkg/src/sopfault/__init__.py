"""Diagnostic test set minimization for two-level SOP circuits.

Parse an expression, enumerate its single stuck-at faults, build the fault
dictionary, and extract a near-minimal distinguishing test set via an
adaptive diagnosing tree. An exhaustive oracle provides exact minima for
small instances.
"""

from .diagnosing_tree import (
    DiagnosingTree,
    MinimizationReport,
    RowScore,
    TreeNode,
    build_tree,
    eliminate_redundant,
    minimization_report,
    rounded_percentage,
    row_score,
    select_row,
)
from .errors import (
    DimensionOverflow,
    DoubleComplement,
    DuplicateVariableInTerm,
    EmptyTerm,
    Infeasible,
    InternalInconsistency,
    InvalidCharacter,
    LimitExceeded,
    NoSplittingRow,
    NotDistinguishing,
    ParseError,
    RowOutOfRange,
    SopFaultError,
    TooManyVariables,
    UnknownFaultId,
)
from .exact_oracle import (
    OracleLimits,
    is_distinguishing,
    minimal_detection_set,
    minimal_distinguishing_set,
)
from .fault_model import (
    Fault,
    FaultClass,
    FaultSite,
    SiteKind,
    UndetectableReport,
    collapse,
    enumerate_faults,
    fault_column,
    faulty_evaluate,
    truth_column,
)
from .fault_table import (
    DEFAULT_ROW_CAP,
    FAULT_FREE_COLUMN,
    FaultDictionary,
    FaultTable,
    build_dictionary,
    dedup,
    detection_matrix,
)
from .generate import generate_expression, generate_sop_text, wide_or_expression
from .pipeline import Diagnosis, DiagnosisStep, PipelineResult, diagnose, run_pipeline
from .sop_parser import (
    DEFAULT_MAX_VARS,
    InputVector,
    Literal,
    SopExpr,
    Term,
    assignment_from_index,
    evaluate,
    expression_from_sop_text,
    load_sop_file,
    parse,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_VARS",
    "DEFAULT_ROW_CAP",
    "FAULT_FREE_COLUMN",
    "Diagnosis",
    "DiagnosisStep",
    "DiagnosingTree",
    "DimensionOverflow",
    "DoubleComplement",
    "DuplicateVariableInTerm",
    "EmptyTerm",
    "Fault",
    "FaultClass",
    "FaultDictionary",
    "FaultSite",
    "FaultTable",
    "Infeasible",
    "InputVector",
    "InternalInconsistency",
    "InvalidCharacter",
    "LimitExceeded",
    "Literal",
    "MinimizationReport",
    "NoSplittingRow",
    "NotDistinguishing",
    "OracleLimits",
    "ParseError",
    "PipelineResult",
    "RowOutOfRange",
    "RowScore",
    "SiteKind",
    "SopExpr",
    "SopFaultError",
    "Term",
    "TooManyVariables",
    "TreeNode",
    "UndetectableReport",
    "UnknownFaultId",
    "assignment_from_index",
    "build_dictionary",
    "build_tree",
    "collapse",
    "dedup",
    "detection_matrix",
    "diagnose",
    "eliminate_redundant",
    "enumerate_faults",
    "evaluate",
    "expression_from_sop_text",
    "fault_column",
    "faulty_evaluate",
    "generate_expression",
    "generate_sop_text",
    "is_distinguishing",
    "load_sop_file",
    "minimal_detection_set",
    "minimal_distinguishing_set",
    "minimization_report",
    "parse",
    "render",
    "rounded_percentage",
    "row_score",
    "run_pipeline",
    "select_row",
    "truth_column",
    "wide_or_expression",
]
