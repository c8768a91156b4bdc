"""Seeded random SOP expressions for test corpora and benchmarks.

Same seed and parameters always give the same text; the RNG is a private
random.Random so global seeding elsewhere cannot interfere.
"""

import random
import string

from .sop_parser import DEFAULT_MAX_VARS


def generate_expression(
    seed: int,
    n_vars: int,
    term_count: int,
    min_literals: int = 1,
    max_literals: int | None = None,
) -> str:
    """Random expression text over the first n_vars letters.

    Each term samples a literal count in [min_literals, max_literals],
    picks that many distinct variables, and complements each with
    probability one half. Terms may repeat; the parser tolerates that and
    collapsing will fold the duplicates' faults together.
    """
    if not 1 <= n_vars <= len(string.ascii_lowercase):
        raise ValueError(f"n_vars must be in 1..26, got {n_vars}")
    if term_count < 1:
        raise ValueError(f"term_count must be positive, got {term_count}")
    if max_literals is None:
        max_literals = n_vars
    if not 1 <= min_literals <= max_literals <= n_vars:
        raise ValueError(
            f"need 1 <= min_literals <= max_literals <= n_vars, "
            f"got {min_literals}..{max_literals} over {n_vars}"
        )
    rng = random.Random(seed)
    terms = []
    for _ in range(term_count):
        width = rng.randint(min_literals, max_literals)
        picked = sorted(rng.sample(range(n_vars), width))
        terms.append(
            "".join(
                string.ascii_lowercase[v] + ("'" if rng.getrandbits(1) else "")
                for v in picked
            )
        )
    return " + ".join(terms)


def generate_sop_text(
    seed: int,
    n_vars: int,
    term_count: int,
    min_literals: int = 1,
    max_literals: int | None = None,
) -> str:
    """Expression wrapped as .sop file content with a provenance comment."""
    expr = generate_expression(seed, n_vars, term_count, min_literals, max_literals)
    header = (
        f"# generated: seed={seed} vars={n_vars} terms={term_count}"
    )
    return f"{header}\n{expr}\n"


def wide_or_expression(n_vars: int) -> str:
    """The scaling family x1*x2 + x3 + ... + xn used for benchmark sweeps."""
    if not 2 <= n_vars <= DEFAULT_MAX_VARS:
        raise ValueError(f"n_vars must be in 2..{DEFAULT_MAX_VARS}, got {n_vars}")
    letters = string.ascii_lowercase
    terms = [letters[0] + letters[1]]
    terms.extend(letters[i] for i in range(2, n_vars))
    return " + ".join(terms)
