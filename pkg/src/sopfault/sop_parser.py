"""Parsing and evaluation of two-level sum-of-products Boolean expressions.

Grammar (whitespace is ignored everywhere):

    expression := term ('+' term)*
    term       := factor+            # juxtaposition is AND; '*' and '.' optional
    factor     := VAR "'"?           # trailing prime complements
    VAR        := single lowercase letter a-z

"ab' + c" is (a AND NOT b) OR c. Variables are indexed alphabetically, not by
first appearance, so truth-table row numbering does not depend on the order
terms were written in. A term may not mention the same variable twice: both
the contradictory "aa'" and the redundant "aa" are rejected rather than
simplified, because simplification would silently change the fault site list.
"""

from dataclasses import dataclass, field

from .errors import (
    DoubleComplement,
    DuplicateVariableInTerm,
    EmptyTerm,
    InvalidCharacter,
    RowOutOfRange,
    TooManyVariables,
)

DEFAULT_MAX_VARS = 20


@dataclass(frozen=True)
class Literal:
    """One occurrence of a variable inside a product term."""

    var_index: int
    complemented: bool

    def render(self, variables: tuple[str, ...]) -> str:
        return variables[self.var_index] + ("'" if self.complemented else "")


@dataclass(frozen=True)
class Term:
    """AND of literals; literals are kept sorted by variable index."""

    literals: tuple[Literal, ...]
    term_index: int


@dataclass(frozen=True)
class SopExpr:
    """A parsed two-level circuit: OR (output stage) of AND terms."""

    variables: tuple[str, ...]
    terms: tuple[Term, ...]
    source_text: str = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def literal_count(self) -> int:
        return sum(len(t.literals) for t in self.terms)

    def render(self) -> str:
        """Canonical text form; re-parsing it yields an equal SopExpr."""
        return " + ".join(
            "".join(lit.render(self.variables) for lit in term.literals)
            for term in self.terms
        )


@dataclass(frozen=True)
class InputVector:
    """An assignment of the n inputs; bits[0] is x1 (the most significant)."""

    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def row_index(self) -> int:
        r = 0
        for b in self.bits:
            r = (r << 1) | b
        return r


def _scan_term(piece: str, ordinal: int) -> list[tuple[str, bool]]:
    """Scan one '+'-separated chunk into (letter, complemented) pairs."""
    raw: list[tuple[str, bool]] = []
    after_separator = False
    for ch in piece:
        if ch.isspace():
            continue
        if "a" <= ch <= "z":
            raw.append((ch, False))
            after_separator = False
        elif ch == "'":
            if not raw or after_separator:
                raise InvalidCharacter(
                    f"term {ordinal}: complement mark without a preceding variable"
                )
            letter, complemented = raw[-1]
            if complemented:
                raise DoubleComplement(f"term {ordinal}: {letter}'' is not allowed")
            raw[-1] = (letter, True)
        elif ch in "*.":
            if not raw or after_separator:
                raise EmptyTerm(f"term {ordinal}: product operator with no left factor")
            after_separator = True
        else:
            raise InvalidCharacter(f"term {ordinal}: unexpected character {ch!r}")
    if after_separator:
        raise EmptyTerm(f"term {ordinal}: product operator with no right factor")
    if not raw:
        raise EmptyTerm(f"term {ordinal} is empty")
    return raw


def parse(text: str, max_vars: int = DEFAULT_MAX_VARS) -> SopExpr:
    """Parse a sum-of-products expression.

    Raises EmptyTerm, InvalidCharacter, DoubleComplement,
    DuplicateVariableInTerm, or TooManyVariables on malformed input.
    """
    pieces = text.split("+")
    scanned = [_scan_term(piece, ordinal) for ordinal, piece in enumerate(pieces)]

    letters = sorted({letter for term in scanned for letter, _ in term})
    if len(letters) > max_vars:
        raise TooManyVariables(f"{len(letters)} variables exceeds the cap of {max_vars}")
    index_of = {letter: i for i, letter in enumerate(letters)}

    terms = []
    for ordinal, raw in enumerate(scanned):
        seen = set()
        for letter, _ in raw:
            if letter in seen:
                raise DuplicateVariableInTerm(
                    f"term {ordinal}: variable {letter!r} appears more than once"
                )
            seen.add(letter)
        literals = tuple(
            sorted(
                (Literal(index_of[letter], complemented) for letter, complemented in raw),
                key=lambda lit: lit.var_index,
            )
        )
        terms.append(Term(literals, ordinal))

    return SopExpr(tuple(letters), tuple(terms), text)


def render(expr: SopExpr) -> str:
    return expr.render()


def evaluate(expr: SopExpr, v: InputVector) -> int:
    """Fault-free output: OR over terms of AND over literals."""
    if v.n != expr.n:
        raise ValueError(f"vector has {v.n} bits, expression has {expr.n} variables")
    for term in expr.terms:
        if all(v.bits[lit.var_index] ^ lit.complemented for lit in term.literals):
            return 1
    return 0


def assignment_from_index(row: int, n: int) -> InputVector:
    """Input vector for truth-table row `row`; x1 is the MSB of the index."""
    if not 0 <= row < (1 << n):
        raise RowOutOfRange(f"row {row} outside [0, 2^{n})")
    return InputVector(tuple((row >> (n - 1 - i)) & 1 for i in range(n)))


def expression_from_sop_text(text: str) -> str:
    """Extract the expression from `.sop` file content.

    Lines starting with '#' are comments; remaining lines are joined, so an
    expression may wrap across lines.
    """
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    expression = " ".join(ln.strip() for ln in lines if ln.strip())
    if not expression:
        raise EmptyTerm("no expression found in .sop content")
    return expression


def load_sop_file(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return expression_from_sop_text(fh.read())
