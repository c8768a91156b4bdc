"""Exact minimum test sets by exhaustive subset search.

Independent of the tree heuristic: subsets are enumerated by increasing
cardinality (lexicographic within a cardinality, so results are
deterministic) and the first hit is a true minimum. Costs are exponential,
hence the hard limits; raising them is the caller's informed choice.
"""

import itertools
from dataclasses import dataclass

from .errors import Infeasible, LimitExceeded
from .fault_table import FaultTable


@dataclass(frozen=True)
class OracleLimits:
    max_rows: int = 24
    max_columns: int = 16
    max_subset_size: int = 12

    def validate(self) -> None:
        if self.max_rows < 1 or self.max_columns < 1 or self.max_subset_size < 1:
            raise ValueError("oracle limits must be positive")


def is_distinguishing(table: FaultTable, tests) -> bool:
    """True when the rows give every column a unique restricted pattern.

    The implicit fault-free column (all zeros) participates, so a class
    whose pattern is all zeros on these rows also fails the check.
    """
    rows = tuple(sorted(set(tests)))
    fault_free = tuple(0 for _ in rows)
    seen = {fault_free}
    for column in table.columns:
        pattern = tuple((column >> t) & 1 for t in rows)
        if pattern in seen:
            return False
        seen.add(pattern)
    return True


def _covers(columns: tuple[int, ...], mask: int) -> bool:
    return all(column & mask for column in columns)


def _separates(columns: tuple[int, ...], mask: int) -> bool:
    seen = {0}
    for column in columns:
        restricted = column & mask
        if restricted in seen:
            return False
        seen.add(restricted)
    return True


def _search(table: FaultTable, limits: OracleLimits, accept) -> tuple[int, ...]:
    limits.validate()
    if len(table.tests) > limits.max_rows:
        raise LimitExceeded(f"{len(table.tests)} rows exceed max_rows={limits.max_rows}")
    if table.class_count > limits.max_columns:
        raise LimitExceeded(
            f"{table.class_count} columns exceed max_columns={limits.max_columns}"
        )
    bound = min(len(table.tests), limits.max_subset_size)
    for size in range(bound + 1):
        for combo in itertools.combinations(table.tests, size):
            mask = 0
            for t in combo:
                mask |= 1 << t
            if accept(table.columns, mask):
                return combo
    if limits.max_subset_size >= len(table.tests):
        raise Infeasible("no subset of the available rows works")
    raise LimitExceeded(
        f"no solution within max_subset_size={limits.max_subset_size}"
    )


def minimal_distinguishing_set(
    table: FaultTable, limits: OracleLimits = OracleLimits()
) -> tuple[int, ...]:
    """Smallest row set separating all columns pairwise (fault-free included)."""
    return _search(table, limits, _separates)


def minimal_detection_set(
    table: FaultTable, limits: OracleLimits = OracleLimits()
) -> tuple[int, ...]:
    """Smallest row set giving every class at least one detection bit."""
    return _search(table, limits, _covers)
