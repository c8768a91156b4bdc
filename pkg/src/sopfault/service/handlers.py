"""Endpoint handlers: plain request-model to response-model functions.

The FastAPI app and the CLI's in-process mode both dispatch through these,
so behaviour cannot drift between local and served runs. Handlers raise
SopFaultError subclasses; transports translate them (HTTP 400 / exit 1).
"""

from concurrent.futures import ThreadPoolExecutor

from ..diagnosing_tree import rounded_percentage
from ..exact_oracle import OracleLimits, is_distinguishing, minimal_distinguishing_set
from ..generate import generate_expression, generate_sop_text
from ..pipeline import PipelineResult, diagnose, run_pipeline
from ..reporting import bench_csv, bench_csv_row, dictionary_csv, tree_ascii, tree_dot
from ..sop_parser import DEFAULT_MAX_VARS, assignment_from_index, parse
from ..sop_parser import expression_from_sop_text
from . import schemas


def _run(expression: str, max_vars: int | None) -> PipelineResult:
    cap = DEFAULT_MAX_VARS if max_vars is None else max_vars
    expr = parse(expression_from_sop_text(expression), cap)
    return run_pipeline(expr, row_cap=1 << cap)


def handle_faults(req: schemas.CircuitRequest) -> schemas.FaultsResponse:
    result = _run(req.expression, req.max_vars)
    class_of: dict[int, int] = {}
    for cls in result.classes:
        for fid in cls.member_ids:
            class_of[fid] = cls.class_id
    return schemas.FaultsResponse(
        expression=result.expr.render(),
        variables=list(result.expr.variables),
        n=result.expr.n,
        fault_count=len(result.faults),
        class_count=len(result.classes),
        faults=[
            schemas.FaultInfo(
                fault_id=f.fault_id,
                site=f.site.describe(),
                stuck_value=f.stuck_value,
                class_id=class_of.get(f.fault_id),
            )
            for f in result.faults
        ],
        classes=[
            schemas.ClassInfo(
                class_id=cls.class_id,
                representative=cls.representative.fault_id,
                members=list(cls.member_ids),
                sites=[f.describe() for f in cls.members],
            )
            for cls in result.classes
        ],
        undetectable=[f.fault_id for f in result.undetectable.faults],
    )


def handle_dict(req: schemas.DictRequest) -> schemas.DictResponse:
    result = _run(req.expression, req.max_vars)
    dictionary = result.dictionary
    n = dictionary.n
    header = [f"x{i + 1}" for i in range(n)]
    header.append("z")
    header.extend(f"f{cls.class_id}" for cls in dictionary.classes)
    rows = None
    csv_text = None
    if req.format == "csv":
        csv_text = dictionary_csv(dictionary)
    else:
        rows = []
        for row in range(dictionary.row_count):
            cells = [(row >> (n - 1 - i)) & 1 for i in range(n)]
            cells.append((dictionary.z_column >> row) & 1)
            cells.extend((cls.column >> row) & 1 for cls in dictionary.classes)
            rows.append(cells)
    return schemas.DictResponse(
        n=n,
        row_count=dictionary.row_count,
        class_count=dictionary.class_count,
        header=header,
        surviving_tests=list(result.table.tests),
        row_groups={k: list(v) for k, v in sorted(result.table.row_groups.items())},
        column_groups={
            k: list(v) for k, v in sorted(result.table.column_groups.items())
        },
        rows=rows,
        csv=csv_text,
    )


def handle_minimize(req: schemas.MinimizeRequest) -> schemas.MinimizeResponse:
    result = _run(req.expression, req.max_vars)
    report = result.report
    final_tests = [
        schemas.TestVector(
            row=t, bits=list(assignment_from_index(t, result.expr.n).bits)
        )
        for t in result.minimized
    ]
    return schemas.MinimizeResponse(
        expression=result.expr.render(),
        n=report.n,
        total_tests=report.total_tests,
        raw_faults=report.raw_faults,
        fault_classes=report.fault_classes,
        undetectable=[f.fault_id for f in result.undetectable.faults],
        selected=list(result.selected),
        minimized_tests=report.minimized_tests,
        final_tests=final_tests,
        minimization_percent=report.percentage,
        minimization_percent_display=report.percentage_display,
        elapsed_seconds=report.elapsed_seconds if req.include_timing else None,
    )


def handle_tree(req: schemas.TreeRequest) -> schemas.TreeResponse:
    result = _run(req.expression, req.max_vars)
    tree = result.tree
    nodes = None
    dot = None
    ascii_art = None
    if req.format == "dot":
        dot = tree_dot(tree)
    elif req.format == "ascii":
        ascii_art = tree_ascii(tree)
    else:
        nodes = []
        for node in tree.nodes:
            if node.is_leaf:
                label = "OK" if node.column == 0 else f"f{node.column - 1}"
                nodes.append(
                    schemas.TreeNodeInfo(
                        node_id=node.node_id, kind="leaf", label=label
                    )
                )
            else:
                nodes.append(
                    schemas.TreeNodeInfo(
                        node_id=node.node_id,
                        kind="test",
                        label=f"T{node.test}",
                        test=node.test,
                        zero=node.zero,
                        one=node.one,
                    )
                )
    return schemas.TreeResponse(
        n=result.expr.n,
        root=tree.root,
        depth=tree.depth,
        min_levels=tree.min_levels,
        leaf_count=len(tree.leaves()),
        selected=list(result.selected),
        nodes=nodes,
        dot=dot,
        ascii_art=ascii_art,
    )


def handle_simulate(req: schemas.SimulateRequest) -> schemas.SimulateResponse:
    result = _run(req.expression, req.max_vars)
    outcome = diagnose(result, req.fault_id)
    class_id = None if outcome.column == 0 else outcome.column - 1
    members: list[int] = []
    if class_id is not None:
        members = list(result.classes[class_id].member_ids)
    site = None
    if req.fault_id is not None:
        site = result.faults[req.fault_id].describe()
    return schemas.SimulateResponse(
        injected=req.fault_id,
        injected_site=site,
        steps=[
            schemas.SimulateStep(
                test=s.test,
                bits=list(s.bits),
                expected=s.expected,
                observed=s.observed,
                detection=s.detection,
            )
            for s in outcome.steps
        ],
        verdict=outcome.verdict,
        class_id=class_id,
        class_members=members,
    )


def handle_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    result = _run(req.expression, req.max_vars)
    limits = OracleLimits(
        max_rows=req.limits.max_rows,
        max_columns=req.limits.max_columns,
        max_subset_size=req.limits.max_subset_size,
    )
    oracle_tests = minimal_distinguishing_set(result.table, limits)
    heuristic_valid = is_distinguishing(result.table, result.minimized)
    gap = len(result.minimized) - len(oracle_tests)
    return schemas.VerifyResponse(
        heuristic_tests=list(result.minimized),
        heuristic_size=len(result.minimized),
        oracle_tests=list(oracle_tests),
        oracle_size=len(oracle_tests),
        gap=gap,
        heuristic_valid=heuristic_valid,
        ok=heuristic_valid and gap >= 0,
    )


def handle_gen(req: schemas.GenRequest) -> schemas.GenResponse:
    expression = generate_expression(
        req.seed, req.n_vars, req.term_count, req.min_literals, req.max_literals
    )
    sop_text = generate_sop_text(
        req.seed, req.n_vars, req.term_count, req.min_literals, req.max_literals
    )
    return schemas.GenResponse(expression=expression, sop_text=sop_text)


def handle_bench(req: schemas.BenchRequest) -> schemas.BenchResponse:
    def one(circuit: schemas.BenchCircuit) -> tuple[schemas.BenchRowModel, str]:
        result = _run(circuit.expression, req.max_vars)
        report = result.report
        model = schemas.BenchRowModel(
            circuit=circuit.name,
            n=report.n,
            total_tests=report.total_tests,
            raw_faults=report.raw_faults,
            fault_classes=report.fault_classes,
            minimized_tests=report.minimized_tests,
            elapsed_seconds=report.elapsed_seconds,
            minimization_percent=rounded_percentage(
                report.total_tests, report.minimized_tests
            ),
        )
        return model, bench_csv_row(circuit.name, report)

    if req.jobs > 1 and len(req.circuits) > 1:
        with ThreadPoolExecutor(max_workers=req.jobs) as pool:
            outcomes = list(pool.map(one, req.circuits))
    else:
        outcomes = [one(c) for c in req.circuits]
    rows = [model for model, _ in outcomes]
    csv_rows = [line for _, line in outcomes]
    return schemas.BenchResponse(rows=rows, csv=bench_csv(csv_rows))


# endpoint name -> (request model, handler, response model); the app and the
# CLI's in-process dispatch both derive from this table
ENDPOINTS = {
    "faults": (schemas.CircuitRequest, handle_faults, schemas.FaultsResponse),
    "dict": (schemas.DictRequest, handle_dict, schemas.DictResponse),
    "minimize": (schemas.MinimizeRequest, handle_minimize, schemas.MinimizeResponse),
    "tree": (schemas.TreeRequest, handle_tree, schemas.TreeResponse),
    "simulate": (schemas.SimulateRequest, handle_simulate, schemas.SimulateResponse),
    "verify": (schemas.VerifyRequest, handle_verify, schemas.VerifyResponse),
    "gen": (schemas.GenRequest, handle_gen, schemas.GenResponse),
    "bench": (schemas.BenchRequest, handle_bench, schemas.BenchResponse),
}
