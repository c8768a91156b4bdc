"""Random circuit generator tests."""

import pytest

from sopfault import generate_expression, generate_sop_text, parse, wide_or_expression
from sopfault.sop_parser import expression_from_sop_text


def test_same_seed_same_output():
    a = generate_expression(42, 5, 4)
    b = generate_expression(42, 5, 4)
    assert a == b
    assert generate_sop_text(42, 5, 4) == generate_sop_text(42, 5, 4)


def test_different_seeds_usually_differ():
    outputs = {generate_expression(seed, 6, 4) for seed in range(30)}
    assert len(outputs) > 25


def test_generated_expressions_reparse():
    for seed in range(50):
        text = generate_expression(seed, 1 + seed % 8, 1 + seed % 5)
        expr = parse(text)
        assert expr.n >= 1
        assert len(expr.terms) == 1 + seed % 5


def test_term_and_literal_bounds():
    for seed in range(30):
        text = generate_expression(seed, 6, 3, min_literals=2, max_literals=4)
        for term_text in text.split("+"):
            width = len(term_text.replace("'", "").replace(" ", ""))
            assert 2 <= width <= 4


def test_single_literal_expression():
    text = generate_expression(7, 1, 1)
    assert text.replace("'", "") == "a"


def test_sop_text_round_trip():
    sop = generate_sop_text(123, 4, 3)
    assert sop.startswith("# generated: seed=123")
    assert expression_from_sop_text(sop) == generate_expression(123, 4, 3)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        generate_expression(1, 0, 1)
    with pytest.raises(ValueError):
        generate_expression(1, 27, 1)
    with pytest.raises(ValueError):
        generate_expression(1, 4, 0)
    with pytest.raises(ValueError):
        generate_expression(1, 4, 2, min_literals=3, max_literals=2)
    with pytest.raises(ValueError):
        generate_expression(1, 4, 2, min_literals=1, max_literals=5)


def test_wide_or_family():
    assert wide_or_expression(2) == "ab"
    assert wide_or_expression(4) == "ab + c + d"
    expr = parse(wide_or_expression(12))
    assert expr.n == 12
    assert len(expr.terms) == 11
    with pytest.raises(ValueError):
        wide_or_expression(1)
