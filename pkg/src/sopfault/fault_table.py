"""Fault dictionary and the deduplicated detection table.

The dictionary pairs the fault-free output column with one column per fault
class over all 2^n input rows. XOR against the fault-free column turns it
into a detection table: bit (row, class) is 1 exactly when applying that row
distinguishes that class from the good circuit.

Columns are 2^n-bit integers throughout (bit r = row r). A row pattern is
the transpose slice: an integer whose bit (k + 1) is the detection bit of
class k on that row, with bit 0 reserved for the implicit fault-free column
and therefore always 0.
"""

from dataclasses import dataclass, field

from .errors import DimensionOverflow, InternalInconsistency
from .fault_model import FaultClass, truth_column
from .sop_parser import SopExpr

# classes beyond this row count would need multi-gigabyte columns
DEFAULT_ROW_CAP = 1 << 20

# column id of the implicit fault-free column; class k is column id k + 1
FAULT_FREE_COLUMN = 0


@dataclass(frozen=True)
class FaultDictionary:
    """Full output table: fault-free column plus one column per class."""

    n: int
    z_column: int
    classes: tuple[FaultClass, ...]

    @property
    def row_count(self) -> int:
        return 1 << self.n

    @property
    def class_count(self) -> int:
        return len(self.classes)


@dataclass
class FaultTable:
    """Detection bits of every class over a set of candidate test rows.

    `tests` are original row indices, ascending. `columns[k]` holds class
    k's detection bits indexed by original row number, so row patterns stay
    comparable across dedup. After dedup, `row_groups` maps each surviving
    representative row to the full group it stands for (itself included);
    `column_groups` is kept for symmetry but is always empty, since classes
    with equal columns would already have been merged during collapsing.
    """

    n: int
    tests: tuple[int, ...]
    columns: tuple[int, ...]
    row_groups: dict[int, tuple[int, ...]] = field(default_factory=dict)
    column_groups: dict[int, tuple[int, ...]] = field(default_factory=dict)
    deduped: bool = False
    _patterns: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def class_count(self) -> int:
        return len(self.columns)

    @property
    def column_count(self) -> int:
        """Distinct behaviours to separate: the classes plus fault-free."""
        return len(self.columns) + 1

    def all_columns_mask(self) -> int:
        return (1 << self.column_count) - 1

    def detection_bit(self, test: int, class_id: int) -> int:
        return (self.columns[class_id] >> test) & 1

    def row_pattern(self, test: int) -> int:
        """Detection bits of one row across all column ids (bit 0 stays 0)."""
        pattern = self._patterns.get(test)
        if pattern is None:
            pattern = 0
            for k, column in enumerate(self.columns):
                pattern |= ((column >> test) & 1) << (k + 1)
            self._patterns[test] = pattern
        return pattern


def build_dictionary(
    expr: SopExpr, classes: list[FaultClass], row_cap: int = DEFAULT_ROW_CAP
) -> FaultDictionary:
    if (1 << expr.n) > row_cap:
        raise DimensionOverflow(
            f"{expr.n} variables need {1 << expr.n} rows, cap is {row_cap}"
        )
    return FaultDictionary(expr.n, truth_column(expr), tuple(classes))


def detection_matrix(dictionary: FaultDictionary) -> FaultTable:
    """XOR each class column against the fault-free column."""
    columns = tuple(dictionary.z_column ^ cls.column for cls in dictionary.classes)
    return FaultTable(
        n=dictionary.n,
        tests=tuple(range(dictionary.row_count)),
        columns=columns,
    )


def _mask_bits(mask: int):
    """Set-bit indices of a big-int mask, ascending, in O(bytes + popcount)."""
    data = mask.to_bytes((mask.bit_length() + 7) >> 3, "little")
    for byte_index, byte in enumerate(data):
        base = byte_index << 3
        while byte:
            low = byte & -byte
            yield base + low.bit_length() - 1
            byte &= byte - 1


def dedup(table: FaultTable) -> FaultTable:
    """Drop duplicate rows, keeping the smallest row index of each group.

    Detection columns must already be pairwise distinct and nonzero (an
    all-zero column would duplicate the implicit fault-free column); finding
    one here means collapsing upstream failed, so it is an internal error,
    not a user error. Row groups from a previous dedup are merged so the
    operation is idempotent.
    """
    if len(set(table.columns)) != len(table.columns):
        raise InternalInconsistency("duplicate detection columns survived collapsing")
    if 0 in table.columns:
        raise InternalInconsistency("undetectable class survived collapsing")

    buf = bytearray((max(table.tests) >> 3) + 1) if table.tests else bytearray()
    for t in table.tests:
        buf[t >> 3] |= 1 << (t & 7)
    alive = int.from_bytes(buf, "little")
    # radix partition: rows are identical iff no column splits them apart
    groups = [alive]
    for column in table.columns:
        split = []
        for group in groups:
            ones = group & column
            zeros = group ^ ones
            if zeros:
                split.append(zeros)
            if ones:
                split.append(ones)
        groups = split

    row_groups: dict[int, tuple[int, ...]] = {}
    survivors = []
    for group in groups:
        members = []
        for row in _mask_bits(group):
            members.extend(table.row_groups.get(row, (row,)))
        rep = min(members)
        survivors.append(rep)
        row_groups[rep] = tuple(sorted(members))

    return FaultTable(
        n=table.n,
        tests=tuple(sorted(survivors)),
        columns=table.columns,
        row_groups=row_groups,
        column_groups=dict(table.column_groups),
        deduped=True,
    )
