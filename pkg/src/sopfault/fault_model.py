"""Single stuck-at faults on a two-level SOP circuit.

Fault sites are the leads of the two-stage circuit: every literal occurrence
(an input of the AND stage), every AND output, and the OR output. Each site
can be stuck-at-0 or stuck-at-1, giving exactly 2*(L + T + 1) faults for L
literal occurrences and T terms.

Columns (the output of the circuit over all 2^n input rows) are computed
bit-parallel: each variable's truth-table column is a 2^n-bit integer mask,
and a whole fault column costs O(L) big-integer AND/OR/XOR operations
instead of 2^n per-row evaluations. `faulty_evaluate` keeps the plain
per-row path; tests cross-check the two against each other.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .sop_parser import InputVector, SopExpr


class SiteKind(Enum):
    LITERAL = "literal"
    TERM_OUTPUT = "term_output"
    CIRCUIT_OUTPUT = "circuit_output"


@dataclass(frozen=True)
class FaultSite:
    kind: SiteKind
    term_index: int | None = None
    literal_index: int | None = None

    def describe(self) -> str:
        """Stable short form: "t0.l1", "t1.out", or "out"."""
        if self.kind is SiteKind.LITERAL:
            return f"t{self.term_index}.l{self.literal_index}"
        if self.kind is SiteKind.TERM_OUTPUT:
            return f"t{self.term_index}.out"
        return "out"


@dataclass(frozen=True)
class Fault:
    site: FaultSite
    stuck_value: int
    fault_id: int

    def describe(self) -> str:
        return f"{self.site.describe()} s-a-{self.stuck_value}"


@dataclass(frozen=True)
class FaultClass:
    """Faults with bit-identical output columns; indistinguishable by any test."""

    class_id: int
    representative: Fault
    members: tuple[Fault, ...]
    column: int

    @property
    def member_ids(self) -> tuple[int, ...]:
        return tuple(f.fault_id for f in self.members)


@dataclass(frozen=True)
class UndetectableReport:
    """Faults whose column equals the fault-free column; no test reveals them."""

    faults: tuple[Fault, ...]


def enumerate_faults(expr: SopExpr) -> list[Fault]:
    """All single stuck-at faults in deterministic structural order.

    Sites are ordered literals-by-(term, position), then term outputs by
    term, then the circuit output; s-a-0 precedes s-a-1 at each site.
    """
    sites: list[FaultSite] = []
    for term in expr.terms:
        for j in range(len(term.literals)):
            sites.append(FaultSite(SiteKind.LITERAL, term.term_index, j))
    for term in expr.terms:
        sites.append(FaultSite(SiteKind.TERM_OUTPUT, term.term_index))
    sites.append(FaultSite(SiteKind.CIRCUIT_OUTPUT))

    faults = []
    for site in sites:
        for stuck in (0, 1):
            faults.append(Fault(site, stuck, len(faults)))
    return faults


def faulty_evaluate(expr: SopExpr, fault: Fault, v: InputVector) -> int:
    """Circuit output on one input vector with the fault's site overridden."""
    if v.n != expr.n:
        raise ValueError(f"vector has {v.n} bits, expression has {expr.n} variables")
    site = fault.site
    if site.kind is SiteKind.CIRCUIT_OUTPUT:
        return fault.stuck_value
    out = 0
    for term in expr.terms:
        if site.kind is SiteKind.TERM_OUTPUT and site.term_index == term.term_index:
            value = fault.stuck_value
        else:
            value = 1
            for j, lit in enumerate(term.literals):
                if (
                    site.kind is SiteKind.LITERAL
                    and site.term_index == term.term_index
                    and site.literal_index == j
                ):
                    bit = fault.stuck_value
                else:
                    bit = v.bits[lit.var_index] ^ lit.complemented
                if not bit:
                    value = 0
                    break
        out |= value
        if out:
            return 1
    return out


@lru_cache(maxsize=32)
def variable_masks(n: int) -> tuple[int, ...]:
    """Truth-table columns of the bare variables as 2^n-bit integers.

    Bit r of masks[i] is the value of variable i on row r (x1 is the MSB of
    the row index, so masks[0] is ones on the upper half of the table).
    """
    rows = 1 << n
    full = (1 << rows) - 1
    masks = []
    for i in range(n):
        run = 1 << (n - 1 - i)
        block = ((1 << run) - 1) << run
        repeat = full // ((1 << (2 * run)) - 1)
        masks.append(block * repeat)
    return tuple(masks)


def _circuit_column(expr: SopExpr, fault: Fault | None) -> int:
    rows = 1 << expr.n
    full = (1 << rows) - 1
    site = fault.site if fault is not None else None
    if site is not None and site.kind is SiteKind.CIRCUIT_OUTPUT:
        return full if fault.stuck_value else 0
    masks = variable_masks(expr.n)
    out = 0
    for term in expr.terms:
        if (
            site is not None
            and site.kind is SiteKind.TERM_OUTPUT
            and site.term_index == term.term_index
        ):
            col = full if fault.stuck_value else 0
        else:
            col = full
            for j, lit in enumerate(term.literals):
                if (
                    site is not None
                    and site.kind is SiteKind.LITERAL
                    and site.term_index == term.term_index
                    and site.literal_index == j
                ):
                    lcol = full if fault.stuck_value else 0
                else:
                    lcol = masks[lit.var_index]
                    if lit.complemented:
                        lcol ^= full
                col &= lcol
                if not col:
                    break
        out |= col
        if out == full:
            break
    return out


def truth_column(expr: SopExpr) -> int:
    """Fault-free output column; bit r is the output on truth-table row r."""
    return _circuit_column(expr, None)


def fault_column(expr: SopExpr, fault: Fault) -> int:
    """Output column of the faulted circuit over all 2^n rows."""
    return _circuit_column(expr, fault)


def collapse(
    expr: SopExpr, faults: list[Fault]
) -> tuple[list[FaultClass], UndetectableReport]:
    """Group faults by identical output column.

    Groups matching the fault-free column are reported as undetectable and
    excluded from the classes. Classes are ordered (and class_id assigned)
    by their representative's fault_id.
    """
    fault_free = truth_column(expr)
    columns = [fault_column(expr, fault) for fault in faults]
    by_column: dict[int, list[Fault]] = {}
    for fault, column in zip(faults, columns):
        by_column.setdefault(column, []).append(fault)

    undetectable = tuple(by_column.pop(fault_free, []))
    classes: list[FaultClass] = []
    seen: set[int] = set()
    for fault, column in zip(faults, columns):
        if column == fault_free or column in seen:
            continue
        seen.add(column)
        members = tuple(by_column[column])
        classes.append(FaultClass(len(classes), members[0], members, column))
    return classes, UndetectableReport(undetectable)
