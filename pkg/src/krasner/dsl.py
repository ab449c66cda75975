"""Textual ``.khr`` hyperring format and parameterized table builders.

The file format is line oriented and comment friendly::

    hyperring H3
    elements: 0 1 a
    zero: 0
    one: 1
    add:
      0 0 -> {0}
      1 1 -> {0,1,a}
      ...
    mul:
      0 0 -> 0
      a a -> 0

Symmetric cells may be given once; the parser mirrors them.  Parsing checks
structure only, never the hyperring axioms.  ``serialize_hyperring`` emits a
canonical, byte-stable form (all n*n cells, row-major, subsets in ascending
element order), so ``parse(serialize(t)) == t`` and serialization is
idempotent on its own output.
"""

from __future__ import annotations

import enum
import re
from typing import NamedTuple

from .core import HyperringTable, bits, mask_of


class SourceSpan(NamedTuple):
    """1-based position in the parsed text."""

    line: int
    column: int


class ParseKind(enum.Enum):
    UNKNOWN_ELEMENT = "UnknownElement"
    MISSING_CELL = "MissingCell"
    DUPLICATE_CELL = "DuplicateCell"
    BAD_HEADER = "BadHeader"
    EMPTY_SET = "EmptySet"
    SYNTAX = "Syntax"


class ParseError(Exception):
    """Hyperring source rejected; carries a position and an error kind."""

    def __init__(self, span: SourceSpan, kind: ParseKind, message: str):
        super().__init__(f"line {span.line}, col {span.column}: [{kind.value}] {message}")
        self.span = span
        self.kind = kind
        self.message = message


class ParamOutOfRange(ValueError):
    """A builder parameter is outside its supported range."""


_NAME_BAD = re.compile(r"[\s{},:#]")
_LABEL_BAD = re.compile(r"[\s#]")


def _check_name(name: str) -> bool:
    return bool(name) and name != "->" and not _NAME_BAD.search(name)


def _check_label(label: str) -> bool:
    # labels only ever sit alone after 'hyperring', so braces and commas are fine
    return bool(label) and not _LABEL_BAD.search(label)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.label: str | None = None
        self.names: list[str] | None = None
        self.index: dict[str, int] = {}
        self.zero: int | None = None
        self.one: int | None = None
        self.add_cells: dict[tuple[int, int], int] = {}
        self.mul_cells: dict[tuple[int, int], int] = {}
        # ordered cells the file spelled out, as opposed to mirrored ones
        self.explicit: set[tuple[str, int, int]] = set()
        self.section: str | None = None

    def fail(self, lineno: int, col: int, kind: ParseKind, msg: str) -> ParseError:
        return ParseError(SourceSpan(lineno, col), kind, msg)

    def element(self, token: str, lineno: int, col: int) -> int:
        if token not in self.index:
            raise self.fail(lineno, col, ParseKind.UNKNOWN_ELEMENT, f"unknown element {token!r}")
        return self.index[token]

    def parse(self) -> HyperringTable:
        for lineno0, raw in enumerate(self.lines):
            line = _strip(raw)
            if not line.strip():
                continue
            self.line_no = lineno0 + 1
            self.handle(line, raw)
        return self.finish()

    def handle(self, line: str, raw: str) -> None:
        lineno = self.line_no
        stripped = line.strip()
        indent = len(line) - len(line.lstrip()) + 1

        if self.label is None:
            parts = stripped.split()
            if len(parts) != 2 or parts[0] != "hyperring":
                raise self.fail(lineno, 1, ParseKind.BAD_HEADER, "expected 'hyperring NAME' first")
            if not _check_label(parts[1]):
                raise self.fail(lineno, len("hyperring ") + 1, ParseKind.BAD_HEADER, "bad hyperring name")
            self.label = parts[1]
            return

        head, sep, rest = stripped.partition(":")
        if sep and head in ("elements", "zero", "one", "add", "mul") and " " not in head:
            self.header(head, rest.strip(), lineno, indent)
            return

        if self.section in ("add", "mul"):
            self.cell(stripped, lineno, indent)
            return
        raise self.fail(lineno, indent, ParseKind.SYNTAX, f"unexpected line {stripped!r}")

    def header(self, head: str, rest: str, lineno: int, col: int) -> None:
        if head == "elements":
            if self.names is not None:
                raise self.fail(lineno, col, ParseKind.BAD_HEADER, "duplicate elements: line")
            tokens = rest.split()
            if not tokens:
                raise self.fail(lineno, col, ParseKind.BAD_HEADER, "elements: line names no elements")
            for tok in tokens:
                if not _check_name(tok):
                    raise self.fail(lineno, col, ParseKind.BAD_HEADER, f"bad element name {tok!r}")
                if tok in self.index:
                    raise self.fail(lineno, col, ParseKind.BAD_HEADER, f"element {tok!r} declared twice")
                self.index[tok] = len(self.index)
            self.names = tokens
            return
        if head in ("zero", "one"):
            if self.names is None:
                raise self.fail(lineno, col, ParseKind.BAD_HEADER, f"{head}: before elements:")
            if getattr(self, head) is not None:
                raise self.fail(lineno, col, ParseKind.BAD_HEADER, f"duplicate {head}: line")
            setattr(self, head, self.element(rest, lineno, col))
            return
        # add: / mul: section markers
        if rest:
            raise self.fail(lineno, col, ParseKind.SYNTAX, f"unexpected text after {head}:")
        if self.names is None:
            raise self.fail(lineno, col, ParseKind.BAD_HEADER, f"{head}: before elements:")
        self.section = head

    def cell(self, text: str, lineno: int, col: int) -> None:
        lhs, arrow, rhs = text.partition("->")
        if not arrow:
            raise self.fail(lineno, col, ParseKind.SYNTAX, f"cell line without '->': {text!r}")
        pair = lhs.split()
        if len(pair) != 2:
            raise self.fail(lineno, col, ParseKind.SYNTAX, "cell needs exactly two elements before '->'")
        x = self.element(pair[0], lineno, col)
        y = self.element(pair[1], lineno, col)
        rhs = rhs.strip()
        if self.section == "add":
            value = self.parse_set(rhs, lineno, col)
            self.store(self.add_cells, "add", x, y, value, lineno, col)
        else:
            value = self.element(rhs, lineno, col)
            self.store(self.mul_cells, "mul", x, y, value, lineno, col)

    def parse_set(self, text: str, lineno: int, col: int) -> int:
        if not (text.startswith("{") and text.endswith("}")):
            raise self.fail(lineno, col, ParseKind.SYNTAX, f"expected a set in braces, got {text!r}")
        body = text[1:-1].strip()
        if not body:
            raise self.fail(lineno, col, ParseKind.EMPTY_SET, "hyperoperation cells must be nonempty")
        mask = 0
        for tok in body.split(","):
            tok = tok.strip()
            if not tok:
                raise self.fail(lineno, col, ParseKind.SYNTAX, "empty entry in set")
            mask |= 1 << self.element(tok, lineno, col)
        return mask

    def store(self, cells: dict, section: str, x: int, y: int, value: int, lineno: int, col: int) -> None:
        where = f"({self.names[x]},{self.names[y]})"
        if (section, x, y) in self.explicit:
            raise self.fail(lineno, col, ParseKind.DUPLICATE_CELL, f"cell {where} specified twice")
        if (x, y) in cells and cells[(x, y)] != value:
            raise self.fail(
                lineno, col, ParseKind.DUPLICATE_CELL,
                f"cell {where} contradicts its mirrored value",
            )
        self.explicit.add((section, x, y))
        cells[(x, y)] = value
        cells[(y, x)] = value

    def finish(self) -> HyperringTable:
        end = SourceSpan(len(self.lines) or 1, 1)
        if self.names is None:
            raise ParseError(end, ParseKind.BAD_HEADER, "missing elements: line")
        if self.zero is None:
            raise ParseError(end, ParseKind.BAD_HEADER, "missing zero: line")
        n = len(self.names)
        missing_add = [(x, y) for x in range(n) for y in range(x, n) if (x, y) not in self.add_cells]
        missing_mul = [(x, y) for x in range(n) for y in range(x, n) if (x, y) not in self.mul_cells]
        if missing_add or missing_mul:
            parts = []
            if missing_add:
                parts.append("add: " + ", ".join(f"({self.names[x]},{self.names[y]})" for x, y in missing_add))
            if missing_mul:
                parts.append("mul: " + ", ".join(f"({self.names[x]},{self.names[y]})" for x, y in missing_mul))
            raise ParseError(end, ParseKind.MISSING_CELL, "unspecified cells: " + "; ".join(parts))
        add = tuple(tuple(self.add_cells[(x, y)] for y in range(n)) for x in range(n))
        mul = tuple(tuple(self.mul_cells[(x, y)] for y in range(n)) for x in range(n))
        try:
            return HyperringTable(
                order=n, names=tuple(self.names), add=add, mul=mul,
                zero=self.zero, one=self.one, label=self.label or "R",
            )
        except ValueError as exc:
            raise ParseError(end, ParseKind.BAD_HEADER, str(exc)) from None


def parse_hyperring(text: str) -> HyperringTable:
    """Parse ``.khr`` source into a structurally valid table.

    Raises :class:`ParseError` with a position and error kind on rejection;
    missing cells are reported in one error listing every absent pair.
    """
    return _Parser(text).parse()


def serialize_hyperring(table: HyperringTable) -> str:
    """Canonical ``.khr`` text for a table (byte-stable across runs)."""
    for name in table.names:
        if not _check_name(name):
            raise ValueError(f"element name {name!r} cannot be serialized")
    if not _check_label(table.label):
        raise ValueError(f"label {table.label!r} cannot be serialized")
    names = table.names
    out = [f"hyperring {table.label}", "elements: " + " ".join(names), f"zero: {names[table.zero]}"]
    if table.one is not None:
        out.append(f"one: {names[table.one]}")
    out.append("add:")
    for x in range(table.order):
        for y in range(table.order):
            members = ",".join(names[i] for i in bits(table.add[x][y]))
            out.append(f"  {names[x]} {names[y]} -> {{{members}}}")
    out.append("mul:")
    for x in range(table.order):
        for y in range(table.order):
            out.append(f"  {names[x]} {names[y]} -> {names[table.mul[x][y]]}")
    return "\n".join(out) + "\n"


_CHAIN_LETTERS = "abcdefghijklmnopqrstuvwxyz"

#: Builders share the bitmask kernel's carrier cap.
MAX_BUILD_ORDER = 64


def classical_zn(n: int) -> HyperringTable:
    """The ring of integers mod n encoded with singleton hyperaddition."""
    if n < 2:
        raise ParamOutOfRange("classical_zn needs n >= 2")
    if n > MAX_BUILD_ORDER:
        raise ParamOutOfRange(f"classical_zn capped at order {MAX_BUILD_ORDER}")
    add = tuple(tuple(1 << ((x + y) % n) for y in range(n)) for x in range(n))
    mul = tuple(tuple((x * y) % n for y in range(n)) for x in range(n))
    return HyperringTable(
        order=n, names=tuple(str(i) for i in range(n)), add=add, mul=mul,
        zero=0, one=1, label=f"Z{n}",
    )


def chain(n: int, mul_rule: str = "min") -> HyperringTable:
    """Finite chain 0 < ... < top with max-flavored hyperaddition.

    ``x+y = {max(x,y)}`` off the diagonal and the full down-set ``{0..x}`` on
    it.  The only multiplication rule shipped is ``min`` (the chain analog of
    the unit interval's ordinary product, which does not close over a finite
    chain).  Builders emit candidates: run ``validate_krasner_hyperring``
    before trusting the result as a hyperring.
    """
    if n < 2:
        raise ParamOutOfRange("chain needs n >= 2")
    if n > MAX_BUILD_ORDER:
        raise ParamOutOfRange(f"chain capped at order {MAX_BUILD_ORDER}")
    if mul_rule != "min":
        raise ParamOutOfRange(f"unsupported chain multiplication {mul_rule!r}")
    names = ["0"] + list(_CHAIN_LETTERS[: n - 2]) + ["1"]
    add = tuple(
        tuple((1 << max(x, y)) if x != y else mask_of(range(x + 1)) for y in range(n))
        for x in range(n)
    )
    mul = tuple(tuple(min(x, y) for y in range(n)) for x in range(n))
    return HyperringTable(
        order=n, names=tuple(names), add=add, mul=mul,
        zero=0, one=n - 1, label=f"chain{n}",
    )


def product(left: HyperringTable, right: HyperringTable) -> HyperringTable:
    """Componentwise product table; hyperaddition cells are cartesian products."""
    n1, n2 = left.order, right.order
    n = n1 * n2
    if n > MAX_BUILD_ORDER:
        raise ParamOutOfRange(f"product order {n} exceeds {MAX_BUILD_ORDER}")

    def idx(x1: int, x2: int) -> int:
        return x1 * n2 + x2

    names = tuple(f"{left.names[x1]}_{right.names[x2]}" for x1 in range(n1) for x2 in range(n2))
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for x1 in range(n1):
        for x2 in range(n2):
            for y1 in range(n1):
                for y2 in range(n2):
                    cell = 0
                    for z1 in bits(left.add[x1][y1]):
                        for z2 in bits(right.add[x2][y2]):
                            cell |= 1 << idx(z1, z2)
                    add[idx(x1, x2)][idx(y1, y2)] = cell
                    mul[idx(x1, x2)][idx(y1, y2)] = idx(left.mul[x1][y1], right.mul[x2][y2])
    one = None
    if left.one is not None and right.one is not None:
        one = idx(left.one, right.one)
    return HyperringTable(
        order=n, names=names,
        add=tuple(tuple(row) for row in add), mul=tuple(tuple(row) for row in mul),
        zero=idx(left.zero, right.zero), one=one, label=f"{left.label}x{right.label}",
    )


def build(kind: str, *args) -> HyperringTable:
    """Dispatch to a named builder: ``classical_zn``, ``chain`` or ``product``."""
    if kind == "classical_zn":
        return classical_zn(*args)
    if kind == "chain":
        return chain(*args)
    if kind == "product":
        return product(*args)
    if kind == "from_tables":
        return HyperringTable(*args)
    raise ParamOutOfRange(f"unknown builder kind {kind!r}")
