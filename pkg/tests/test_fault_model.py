"""Fault enumeration, faulty evaluation, and collapsing tests.

Fault columns are checked two independent ways: bit-parallel columns against
per-row faulty_evaluate, and against truth tables of hand-reduced
expressions (a stuck literal turns ab+c into c, b+c, and so on) computed by
the naive text interpreter from the parser tests.
"""

import random

from sopfault import (
    SiteKind,
    assignment_from_index,
    collapse,
    enumerate_faults,
    evaluate,
    fault_column,
    faulty_evaluate,
    generate_expression,
    parse,
    truth_column,
)


def naive_eval(text: str, assignment: dict[str, int]) -> int:
    out = 0
    for term_text in text.split("+"):
        term_text = term_text.replace("*", "").replace(".", "").replace(" ", "")
        value = 1
        i = 0
        while i < len(term_text):
            var = term_text[i]
            neg = i + 1 < len(term_text) and term_text[i + 1] == "'"
            value &= assignment[var] ^ (1 if neg else 0)
            i += 2 if neg else 1
        out |= value
    return out


def naive_column(text: str, variables: tuple[str, ...], n: int) -> int:
    """Truth column of a reduced expression over the ORIGINAL variable list."""
    column = 0
    for row in range(1 << n):
        bits = assignment_from_index(row, n).bits
        if naive_eval(text, dict(zip(variables, bits))):
            column |= 1 << row
    return column


def fault_by_description(faults, description):
    matches = [f for f in faults if f.describe() == description]
    assert len(matches) == 1, description
    return matches[0]


def test_fault_count_formula():
    assert len(enumerate_faults(parse("ab + c"))) == 12
    assert len(enumerate_faults(parse("a"))) == 6
    assert len(enumerate_faults(parse("a*b' + c'd"))) == 14


def test_enumeration_order_and_ids():
    faults = enumerate_faults(parse("ab + c"))
    assert [f.fault_id for f in faults] == list(range(12))
    assert [f.describe() for f in faults] == [
        "t0.l0 s-a-0",
        "t0.l0 s-a-1",
        "t0.l1 s-a-0",
        "t0.l1 s-a-1",
        "t1.l0 s-a-0",
        "t1.l0 s-a-1",
        "t0.out s-a-0",
        "t0.out s-a-1",
        "t1.out s-a-0",
        "t1.out s-a-1",
        "out s-a-0",
        "out s-a-1",
    ]


def test_circuit_output_faults_force_constant():
    expr = parse("ab + c")
    faults = enumerate_faults(expr)
    stuck0 = fault_by_description(faults, "out s-a-0")
    stuck1 = fault_by_description(faults, "out s-a-1")
    for row in range(8):
        v = assignment_from_index(row, 3)
        assert faulty_evaluate(expr, stuck0, v) == 0
        assert faulty_evaluate(expr, stuck1, v) == 1
    assert fault_column(expr, stuck0) == 0
    assert fault_column(expr, stuck1) == (1 << 8) - 1


def test_faulty_evaluate_examples():
    expr = parse("ab + c")
    faults = enumerate_faults(expr)
    a_stuck0 = fault_by_description(faults, "t0.l0 s-a-0")
    v110 = assignment_from_index(6, 3)
    assert evaluate(expr, v110) == 1
    assert faulty_evaluate(expr, a_stuck0, v110) == 0
    term_stuck0 = fault_by_description(faults, "t0.out s-a-0")
    v111 = assignment_from_index(7, 3)
    assert faulty_evaluate(expr, term_stuck0, v111) == 1


def test_fault_columns_match_reduced_expressions():
    expr = parse("ab + c")
    faults = enumerate_faults(expr)
    reductions = {
        "t0.l0 s-a-0": "c",        # term ab killed
        "t0.l0 s-a-1": "b + c",    # a disappears from the term
        "t0.l1 s-a-1": "a + c",
        "t1.l0 s-a-0": "ab",
        "t0.out s-a-0": "c",
        "t1.out s-a-0": "ab",
    }
    for description, reduced in reductions.items():
        fault = fault_by_description(faults, description)
        expected = naive_column(reduced, expr.variables, expr.n)
        assert fault_column(expr, fault) == expected, description


def test_literal_c_stuck1_equals_output_stuck1():
    expr = parse("ab + c")
    faults = enumerate_faults(expr)
    c_stuck1 = fault_by_description(faults, "t1.l0 s-a-1")
    out_stuck1 = fault_by_description(faults, "out s-a-1")
    assert fault_column(expr, c_stuck1) == fault_column(expr, out_stuck1)
    assert fault_column(expr, c_stuck1) == (1 << 8) - 1


def test_fault_column_agrees_with_per_row_route():
    for seed in range(30):
        rng = random.Random(seed)
        n = rng.randint(1, 6)
        expr = parse(generate_expression(seed + 500, n, rng.randint(1, 4)))
        for fault in enumerate_faults(expr):
            column = fault_column(expr, fault)
            for row in range(1 << expr.n):
                v = assignment_from_index(row, expr.n)
                assert (column >> row) & 1 == faulty_evaluate(expr, fault, v)


def test_truth_column_agrees_with_evaluate():
    for seed in range(30):
        rng = random.Random(seed)
        expr = parse(generate_expression(seed + 900, rng.randint(1, 7), rng.randint(1, 4)))
        column = truth_column(expr)
        for row in range(1 << expr.n):
            v = assignment_from_index(row, expr.n)
            assert (column >> row) & 1 == evaluate(expr, v)


def test_collapse_worked_example():
    expr = parse("ab + c")
    faults = enumerate_faults(expr)
    classes, undetectable = collapse(expr, faults)
    assert undetectable.faults == ()
    assert [cls.class_id for cls in classes] == list(range(6))
    assert [cls.member_ids for cls in classes] == [
        (0, 2, 6),       # a s-a-0, b s-a-0, term(ab) s-a-0 -> z = c
        (1,),            # a s-a-1 -> z = b + c
        (3,),            # b s-a-1 -> z = a + c
        (4, 8),          # c s-a-0, term(c) s-a-0 -> z = ab
        (5, 7, 9, 11),   # forced-1 group -> z = 1
        (10,),           # output s-a-0 -> z = 0
    ]
    assert [cls.representative.fault_id for cls in classes] == [0, 1, 3, 4, 5, 10]
    # representative reduced functions
    assert classes[0].column == naive_column("c", expr.variables, 3)
    assert classes[1].column == naive_column("b + c", expr.variables, 3)
    assert classes[2].column == naive_column("a + c", expr.variables, 3)
    assert classes[3].column == naive_column("ab", expr.variables, 3)
    assert classes[4].column == 0b11111111
    assert classes[5].column == 0


def test_collapse_tautology_undetectable():
    expr = parse("a + a'")
    faults = enumerate_faults(expr)
    classes, undetectable = collapse(expr, faults)
    undetectable_ids = {f.fault_id for f in undetectable.faults}
    out_stuck1 = [f for f in faults if f.describe() == "out s-a-1"][0]
    assert out_stuck1.fault_id in undetectable_ids
    # every fault that forces a term to 1 keeps z == 1 here
    assert undetectable_ids == {1, 3, 5, 7, 9}
    assert len(classes) == 3


def test_output_stuck_faults_never_collapse_together():
    for seed in range(20):
        rng = random.Random(seed)
        expr = parse(generate_expression(seed + 77, rng.randint(1, 6), rng.randint(1, 4)))
        faults = enumerate_faults(expr)
        classes, _ = collapse(expr, faults)
        stuck0 = next(f for f in faults if f.site.kind is SiteKind.CIRCUIT_OUTPUT and f.stuck_value == 0)
        stuck1 = next(f for f in faults if f.site.kind is SiteKind.CIRCUIT_OUTPUT and f.stuck_value == 1)
        of = {}
        for cls in classes:
            for fid in cls.member_ids:
                of[fid] = cls.class_id
        if stuck0.fault_id in of and stuck1.fault_id in of:
            assert of[stuck0.fault_id] != of[stuck1.fault_id]


def test_literal_stuck0_collapses_with_term_output_stuck0():
    for seed in range(25):
        rng = random.Random(seed)
        expr = parse(generate_expression(seed + 333, rng.randint(1, 6), rng.randint(1, 4)))
        faults = enumerate_faults(expr)
        by_site = {f.describe(): f for f in faults}
        for term in expr.terms:
            term_fault = by_site[f"t{term.term_index}.out s-a-0"]
            for j in range(len(term.literals)):
                lit_fault = by_site[f"t{term.term_index}.l{j} s-a-0"]
                assert fault_column(expr, lit_fault) == fault_column(expr, term_fault)


def test_partition_property_and_class_soundness():
    for seed in range(25):
        rng = random.Random(seed)
        expr = parse(generate_expression(seed + 4242, rng.randint(1, 8), rng.randint(1, 4)))
        faults = enumerate_faults(expr)
        classes, undetectable = collapse(expr, faults)
        z = truth_column(expr)
        seen: set[int] = set()
        for cls in classes:
            for member in cls.members:
                assert member.fault_id not in seen
                seen.add(member.fault_id)
                assert fault_column(expr, member) == cls.column
            assert cls.column != z
        for fault in undetectable.faults:
            assert fault.fault_id not in seen
            seen.add(fault.fault_id)
            assert fault_column(expr, fault) == z
        assert seen == {f.fault_id for f in faults}
        columns = [cls.column for cls in classes]
        assert len(set(columns)) == len(columns)
