"""Adaptive diagnosing tree and test set minimization.

Each internal node applies one test row; the observed detection bit (output
differs from fault-free or not) routes to the 0- or 1-child. Leaves name a
single surviving column: a fault class or the fault-free circuit. The row
picked at a node is the one splitting the still-active columns most evenly,
i.e. minimal |W0 - W1| where W0/W1 count active columns with detection bit
0/1. That equals maximizing the resolved pairs W0*W1, since W0 + W1 is
fixed at a node. Ties go to the smallest row index, and rows already used
on the path are skipped, which makes the build deterministic.

Active column sets are int bitmasks over column ids (bit 0 = fault-free,
bit k + 1 = class k), matching FaultTable.row_pattern.
"""

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import NoSplittingRow, NotDistinguishing
from .fault_table import FaultTable


@dataclass(frozen=True)
class RowScore:
    """Split counts of one candidate row over the active columns."""

    zeros: int
    ones: int

    @property
    def imbalance(self) -> int:
        return abs(self.zeros - self.ones)

    @property
    def pairs(self) -> int:
        """Column pairs the row resolves; maximal exactly when imbalance is minimal."""
        return self.zeros * self.ones

    @property
    def splits(self) -> bool:
        return self.zeros > 0 and self.ones > 0


@dataclass(frozen=True)
class TreeNode:
    """Internal node (test set, children set) or leaf (column set)."""

    node_id: int
    test: int | None = None
    zero: int | None = None
    one: int | None = None
    column: int | None = None

    @property
    def is_leaf(self) -> bool:
        return self.test is None


@dataclass(frozen=True)
class DiagnosingTree:
    nodes: tuple[TreeNode, ...]
    root: int
    class_count: int

    @property
    def depth(self) -> int:
        """Most tests applied on any root-to-leaf path."""

        def walk(node_id: int) -> int:
            node = self.nodes[node_id]
            if node.is_leaf:
                return 0
            return 1 + max(walk(node.zero), walk(node.one))

        return walk(self.root)

    @property
    def min_levels(self) -> int:
        """Information bound: ceil(log2(columns)) levels to separate them all."""
        # class_count + 1 columns; bit_length of class_count equals the ceil-log
        return self.class_count.bit_length()

    def leaves(self) -> list[TreeNode]:
        return [node for node in self.nodes if node.is_leaf]

    def classify(self, outcome) -> int:
        """Walk the tree with outcome(test) -> detection bit; return leaf column id."""
        node = self.nodes[self.root]
        while not node.is_leaf:
            node = self.nodes[node.one if outcome(node.test) else node.zero]
        return node.column


@dataclass(frozen=True)
class MinimizationReport:
    n: int
    total_tests: int
    raw_faults: int
    fault_classes: int
    minimized_tests: int
    elapsed_seconds: float

    @property
    def percentage(self) -> float:
        return (self.total_tests - self.minimized_tests) / self.total_tests * 100.0

    @property
    def percentage_display(self) -> str:
        return rounded_percentage(self.total_tests, self.minimized_tests)


def rounded_percentage(total: int, kept: int) -> str:
    """(total - kept) / total as a percentage, one decimal, half rounds up.

    Built on Decimal: float round() rounds half to even, which turns exact
    halves like 56.25 into 56.2 instead of 56.3.
    """
    pct = Decimal(100 * (total - kept)) / Decimal(total)
    return str(pct.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def row_score(table: FaultTable, test: int, active_columns: int) -> RowScore:
    ones = (table.row_pattern(test) & active_columns).bit_count()
    return RowScore(zeros=active_columns.bit_count() - ones, ones=ones)


def select_row(table: FaultTable, active_columns: int, used: set[int]) -> int:
    """Best splitting row for the active columns: minimal imbalance, then lowest index."""
    best = None
    best_key = None
    for test in table.tests:
        if test in used:
            continue
        score = row_score(table, test, active_columns)
        if not score.splits:
            continue
        key = (score.imbalance, test)
        if best_key is None or key < best_key:
            best, best_key = test, key
    if best is None:
        raise NoSplittingRow(
            f"no unused row splits the {active_columns.bit_count()} active columns"
        )
    return best


def build_tree(table: FaultTable) -> tuple[DiagnosingTree, list[int]]:
    """Grow the tree on a deduplicated table.

    Returns the tree and the tests in first-selection order (0-subtrees
    explored before 1-subtrees). Rows already applied on the current path
    are excluded at each node; since distinct columns always leave some
    off-path splitting row, NoSplittingRow cannot fire on a deduplicated
    table and would indicate corrupted inputs.
    """
    nodes: list[TreeNode | None] = []
    selected: list[int] = []
    chosen: set[int] = set()

    def grow(active: int, used: frozenset[int]) -> int:
        if active & (active - 1) == 0:
            node_id = len(nodes)
            nodes.append(TreeNode(node_id, column=active.bit_length() - 1))
            return node_id
        test = select_row(table, active, used)
        if test not in chosen:
            chosen.add(test)
            selected.append(test)
        node_id = len(nodes)
        nodes.append(None)
        ones = active & table.row_pattern(test)
        below = used | {test}
        zero_id = grow(active ^ ones, below)
        one_id = grow(ones, below)
        nodes[node_id] = TreeNode(node_id, test=test, zero=zero_id, one=one_id)
        return node_id

    root = grow(table.all_columns_mask(), frozenset())
    tree = DiagnosingTree(tuple(nodes), root, table.class_count)
    return tree, selected


def is_distinguishing_subset(table: FaultTable, tests) -> bool:
    """Do these rows separate all classes from each other and from fault-free?"""
    mask = 0
    for test in tests:
        mask |= 1 << test
    seen = {0}
    for column in table.columns:
        restricted = column & mask
        if restricted in seen:
            return False
        seen.add(restricted)
    return True


def eliminate_redundant(selected: list[int], table: FaultTable) -> list[int]:
    """Drop tests that the rest of the set already covers.

    Candidates are tried in reverse selection order; a test is dropped when
    the remainder still separates every column pair. The input must be
    distinguishing to begin with.
    """
    if not is_distinguishing_subset(table, selected):
        raise NotDistinguishing(
            f"{len(selected)} tests do not separate all {table.column_count} columns"
        )
    kept = list(selected)
    for test in reversed(selected):
        trial = [t for t in kept if t != test]
        if is_distinguishing_subset(table, trial):
            kept = trial
    return kept


def minimization_report(
    table: FaultTable,
    raw_faults: int,
    minimized: list[int],
    elapsed_seconds: float,
) -> MinimizationReport:
    return MinimizationReport(
        n=table.n,
        total_tests=1 << table.n,
        raw_faults=raw_faults,
        fault_classes=table.class_count,
        minimized_tests=len(minimized),
        elapsed_seconds=elapsed_seconds,
    )
