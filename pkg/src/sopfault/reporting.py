"""Text renderings: dictionary CSV, tree DOT/ASCII, benchmark CSV.

Column orders and header names here are frozen; downstream tooling parses
them.
"""

from .diagnosing_tree import DiagnosingTree, MinimizationReport
from .fault_table import FaultDictionary

BENCH_COLUMNS = (
    "circuit",
    "n",
    "total_tests",
    "raw_faults",
    "fault_classes",
    "minimized_tests",
    "elapsed_seconds",
    "minimization_percent",
)


def dictionary_csv(dictionary: FaultDictionary) -> str:
    """Header x1..xn,z,f0..; one row per input vector in row-index order."""
    n = dictionary.n
    header = [f"x{i + 1}" for i in range(n)]
    header.append("z")
    header.extend(f"f{cls.class_id}" for cls in dictionary.classes)
    lines = [",".join(header)]
    for row in range(dictionary.row_count):
        cells = [str((row >> (n - 1 - i)) & 1) for i in range(n)]
        cells.append(str((dictionary.z_column >> row) & 1))
        cells.extend(str((cls.column >> row) & 1) for cls in dictionary.classes)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _leaf_label(column: int) -> str:
    return "OK" if column == 0 else f"f{column - 1}"


def tree_dot(tree: DiagnosingTree) -> str:
    """Graphviz digraph; internal nodes labeled T<row index>, edges 0/1."""
    lines = ["digraph diagnosing_tree {"]
    for node in tree.nodes:
        if node.is_leaf:
            lines.append(
                f'  n{node.node_id} [label="{_leaf_label(node.column)}" shape=box];'
            )
        else:
            lines.append(f'  n{node.node_id} [label="T{node.test}"];')
    for node in tree.nodes:
        if not node.is_leaf:
            lines.append(f'  n{node.node_id} -> n{node.zero} [label="0"];')
            lines.append(f'  n{node.node_id} -> n{node.one} [label="1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_ascii(tree: DiagnosingTree) -> str:
    """Indented outline; each internal node shows its 0 branch before its 1 branch."""
    lines: list[str] = []

    def walk(node_id: int, depth: int, edge: str) -> None:
        node = tree.nodes[node_id]
        prefix = "  " * depth + (f"{edge} -> " if edge else "")
        if node.is_leaf:
            lines.append(prefix + _leaf_label(node.column))
            return
        lines.append(prefix + f"[T{node.test}]")
        walk(node.zero, depth + 1, "0")
        walk(node.one, depth + 1, "1")

    walk(tree.root, 0, "")
    return "\n".join(lines) + "\n"


def bench_csv_row(name: str, report: MinimizationReport) -> str:
    cells = (
        name,
        str(report.n),
        str(report.total_tests),
        str(report.raw_faults),
        str(report.fault_classes),
        str(report.minimized_tests),
        f"{report.elapsed_seconds:.6f}",
        report.percentage_display,
    )
    return ",".join(cells)


def bench_csv(rows: list[str]) -> str:
    return "\n".join([",".join(BENCH_COLUMNS), *rows]) + "\n"
