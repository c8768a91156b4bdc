"""Parser, evaluator, and row-indexing tests.

The evaluation oracle here is a separate tiny interpreter over the raw
expression text, so a parser bug and an evaluator bug cannot cancel out.
"""

import random

import pytest

from sopfault import (
    DoubleComplement,
    DuplicateVariableInTerm,
    EmptyTerm,
    InvalidCharacter,
    RowOutOfRange,
    TooManyVariables,
    assignment_from_index,
    evaluate,
    expression_from_sop_text,
    generate_expression,
    load_sop_file,
    parse,
    render,
)


def naive_eval(text: str, assignment: dict[str, int]) -> int:
    """Independent reference: interpret the raw text directly."""
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


def vector(bits: str):
    return assignment_from_index(int(bits, 2), len(bits))


def test_basic_structure():
    expr = parse("ab + c")
    assert expr.variables == ("a", "b", "c")
    assert expr.n == 3
    assert len(expr.terms) == 2
    assert [(lit.var_index, lit.complemented) for lit in expr.terms[0].literals] == [
        (0, False),
        (1, False),
    ]
    assert [(lit.var_index, lit.complemented) for lit in expr.terms[1].literals] == [
        (2, False)
    ]


def test_explicit_product_operators():
    expr = parse("a*b' + c'd")
    assert expr.n == 4
    assert [(lit.var_index, lit.complemented) for lit in expr.terms[0].literals] == [
        (0, False),
        (1, True),
    ]
    assert [(lit.var_index, lit.complemented) for lit in expr.terms[1].literals] == [
        (2, True),
        (3, False),
    ]
    # '*' and '.' are cosmetic: same circuit either way
    assert parse("a*b + c") == parse("ab + c")
    assert parse("a.b + c") == parse("ab + c")


def test_opposite_polarities_across_terms():
    expr = parse("a + a'")
    assert expr.n == 1
    assert len(expr.terms) == 2
    assert expr.terms[0].literals[0].complemented is False
    assert expr.terms[1].literals[0].complemented is True


def test_whitespace_ignored():
    assert parse(" a b\t+ \tc ") == parse("ab + c")


def test_variable_order_alphabetical_not_positional():
    expr = parse("ba + d'c")
    assert expr.variables == ("a", "b", "c", "d")
    # literals sorted by variable index inside each term
    assert [lit.var_index for lit in expr.terms[0].literals] == [0, 1]
    assert [lit.var_index for lit in expr.terms[1].literals] == [2, 3]


def test_term_order_preserved():
    expr = parse("c + ab")
    assert expr.terms[0].literals[0].var_index == 2
    assert expr.terms[0].term_index == 0
    assert expr.terms[1].term_index == 1


def test_parse_errors():
    with pytest.raises(EmptyTerm):
        parse("a + + b")
    with pytest.raises(EmptyTerm):
        parse("")
    with pytest.raises(EmptyTerm):
        parse("a +")
    with pytest.raises(InvalidCharacter):
        parse("a + B")
    with pytest.raises(InvalidCharacter):
        parse("'a")
    with pytest.raises(InvalidCharacter):
        parse("a1 + b")
    with pytest.raises(DoubleComplement):
        parse("a''")
    with pytest.raises(DuplicateVariableInTerm):
        parse("aa'")
    with pytest.raises(DuplicateVariableInTerm):
        parse("aa")
    with pytest.raises(TooManyVariables):
        parse("abc", max_vars=2)


def test_max_vars_default_cap():
    letters = [chr(ord("a") + i) for i in range(21)]
    with pytest.raises(TooManyVariables):
        parse(" + ".join(letters))
    expr = parse(" + ".join(letters[:20]))
    assert expr.n == 20


def test_round_trip_fixed():
    for text in ["ab + c", "a*b' + c'd", "a + a'", "a'b'c' + abc", "a"]:
        expr = parse(text)
        assert parse(render(expr)) == expr


def test_round_trip_random():
    for seed in range(60):
        rng = random.Random(seed)
        text = generate_expression(seed, rng.randint(1, 8), rng.randint(1, 5))
        expr = parse(text)
        assert parse(render(expr)) == expr


def test_evaluate_examples():
    expr = parse("ab + c")
    assert evaluate(expr, vector("110")) == 1
    assert evaluate(expr, vector("000")) == 0
    assert evaluate(parse("a'"), vector("1")) == 0


def test_evaluate_rejects_wrong_width():
    with pytest.raises(ValueError):
        evaluate(parse("ab + c"), vector("01"))


def test_evaluate_matches_naive_oracle():
    for seed in range(40):
        rng = random.Random(seed)
        n = rng.randint(1, 8)
        text = generate_expression(seed + 1000, n, rng.randint(1, 5))
        expr = parse(text)
        for row in range(1 << expr.n):
            v = assignment_from_index(row, expr.n)
            assignment = dict(zip(expr.variables, v.bits))
            assert evaluate(expr, v) == naive_eval(text, assignment), (text, row)


def test_assignment_from_index_examples():
    assert assignment_from_index(0, 3).bits == (0, 0, 0)
    assert assignment_from_index(7, 3).bits == (1, 1, 1)
    # x1 is the most significant bit
    assert assignment_from_index(6, 3).bits == (1, 1, 0)


def test_assignment_round_trip_bijection():
    seen = set()
    for row in range(16):
        v = assignment_from_index(row, 4)
        assert v.row_index == row
        seen.add(v.bits)
    assert len(seen) == 16


def test_assignment_out_of_range():
    with pytest.raises(RowOutOfRange):
        assignment_from_index(8, 3)
    with pytest.raises(RowOutOfRange):
        assignment_from_index(-1, 3)


def test_sop_text_comments_and_wrapping():
    text = "# circuit under test\nab +\n c\n# trailing note\n"
    assert expression_from_sop_text(text) == "ab + c"
    with pytest.raises(EmptyTerm):
        expression_from_sop_text("# only a comment\n")


def test_load_sop_file(tmp_path):
    path = tmp_path / "c.sop"
    path.write_text("# demo\nab + c\n", encoding="ascii")
    assert parse(load_sop_file(str(path))) == parse("ab + c")
