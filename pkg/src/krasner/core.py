"""Finite commutative Krasner hyperrings as explicit Cayley-style tables.

The carrier is always ``{0, ..., n-1}``; subsets of the carrier are plain int
bitmasks (bit ``i`` set means element ``i`` is a member).  ``HyperringTable``
stores a subset-valued hyperaddition table and an ordinary multiplication
table.  Tables are immutable and hashable, and every operation in this module
is a pure function, so tables can be shared across concurrent workers without
any locking.

Axioms are decided by exhaustive scans over all pairs/triples (O(n^3) set
operations), so a passing ``AxiomReport`` is a certificate, not a sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

#: Orders above this would not fit a single machine-word bitmask kernel.
MAX_ORDER = 64

CANONICAL_AXIOMS = (
    "add-associativity",
    "add-commutativity",
    "zero-scalar-identity",
    "unique-inverses",
    "reversibility",
)

KRASNER_AXIOMS = (
    "mul-associativity",
    "zero-absorbing",
    "distributivity",
    "mul-commutativity",
)


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with exactly the given element indices set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class NotCanonical(Exception):
    """An operation needed canonical-hypergroup structure the table lacks."""


@dataclass(frozen=True)
class HyperringTable:
    """Complete finite presentation of a candidate Krasner hyperring.

    ``add[x][y]`` is the bitmask of the subset x+y, ``mul[x][y]`` the single
    element x*y.  ``zero`` is the additive scalar identity candidate, ``one``
    the multiplicative identity if the table has one.  ``names`` are display
    labels only; all computation is index-based.

    Construction checks structural well-formedness (shapes, nonempty cells,
    distinct names, and that a declared ``one`` really is a two-sided
    multiplicative identity).  It does *not* check the hyperring axioms; use
    :func:`validate_krasner_hyperring` for that.
    """

    order: int
    names: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int | None = None
    label: str = "R"

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.names) != n or len(set(self.names)) != n:
            raise ValueError("names must be distinct and match the order")
        if any(not name for name in self.names):
            raise ValueError("names must be nonempty")
        full = (1 << n) - 1
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise ValueError("add table must be order x order")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValueError("mul table must be order x order")
        for x in range(n):
            for y in range(n):
                cell = self.add[x][y]
                if cell == 0 or cell & ~full:
                    raise ValueError(f"add cell ({x},{y}) must be a nonempty carrier subset")
                if not 0 <= self.mul[x][y] < n:
                    raise ValueError(f"mul cell ({x},{y}) out of range")
        if not 0 <= self.zero < n:
            raise ValueError("zero out of range")
        if self.one is not None:
            if not 0 <= self.one < n:
                raise ValueError("one out of range")
            e = self.one
            for x in range(n):
                if self.mul[e][x] != x or self.mul[x][e] != x:
                    raise ValueError(
                        f"declared one {self.names[e]!r} is not a multiplicative identity"
                    )
        object.__setattr__(
            self, "_hash", hash((self.order, self.names, self.add, self.mul, self.zero, self.one, self.label))
        )

    def __hash__(self) -> int:  # cached; tables sit in hot lru_cache keys
        return self._hash  # type: ignore[attr-defined]

    @property
    def carrier(self) -> int:
        """Bitmask of the full carrier."""
        return (1 << self.order) - 1

    def element(self, name: str) -> int:
        """Index of the element with the given display name."""
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r} in {self.label}") from None

    def subset(self, names: Iterable[str]) -> int:
        """Bitmask of the named elements."""
        return mask_of(self.element(n) for n in names)

    def set_str(self, mask: int) -> str:
        """Render a bitmask as ``{a,b,...}`` using display names."""
        return "{" + ",".join(self.names[i] for i in bits(mask)) + "}"

    def __repr__(self) -> str:
        return f"HyperringTable({self.label!r}, order={self.order})"


@dataclass(frozen=True)
class Violation:
    """One axiom failure with the witness elements that produced it."""

    axiom: str
    witness: tuple[int, ...]
    message: str


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    ``violations`` holds the first witness per axiom unless the check was run
    with ``all_witnesses=True``; ``counts`` always has the total number of
    failures per axiom id.  ``passed`` is true exactly when no axiom failed.
    """

    checked: tuple[str, ...]
    violations: list[Violation] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        ok = sum(1 for ax in self.checked if not self.counts.get(ax))
        return f"{ok}/{len(self.checked)} axioms"


@dataclass(frozen=True)
class ClassificationResult:
    """Verdict of a predicate on an ideal, with a witness when it fails.

    ``witness`` maps role labels (``a``, ``b``, ``N`` ...) to element indices
    or index tuples; ``note`` is a human-readable account (and says
    ``vacuous`` when the predicate held because no premise instance exists).
    """

    verdict: bool
    witness: Mapping[str, object] | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def hyper_sum(table: HyperringTable, a_mask: int, b_mask: int) -> int:
    """Setwise hyperaddition: union of ``add[a][b]`` over all members.

    Empty whenever either argument is empty.
    """
    out = 0
    add = table.add
    for a in bits(a_mask):
        row = add[a]
        for b in bits(b_mask):
            out |= row[b]
    return out


@lru_cache(maxsize=None)
def negation_table(table: HyperringTable) -> tuple[int, ...]:
    """Per-element unique additive inverse; raises ``NotCanonical`` if absent."""
    zero_bit = 1 << table.zero
    neg = []
    for x in range(table.order):
        cands = [y for y in range(table.order) if table.add[x][y] & zero_bit]
        if len(cands) != 1:
            raise NotCanonical(
                f"element {table.names[x]!r} has {len(cands)} additive inverses"
            )
        neg.append(cands[0])
    return tuple(neg)


def negate(table: HyperringTable, x: int) -> int:
    """The unique x' with zero in x+x' (requires a canonical table)."""
    return negation_table(table)[x]


class _Recorder:
    """Collects violations, keeping the first witness per axiom by default."""

    def __init__(self, all_witnesses: bool):
        self.all = all_witnesses
        self.violations: list[Violation] = []
        self.counts: dict[str, int] = {}

    def hit(self, axiom: str, witness: tuple[int, ...], message: str) -> None:
        seen = self.counts.get(axiom, 0)
        self.counts[axiom] = seen + 1
        if self.all or seen == 0:
            self.violations.append(Violation(axiom, witness, message))


def validate_canonical_hypergroup(
    table: HyperringTable, all_witnesses: bool = False
) -> AxiomReport:
    """Exhaustively decide the canonical hypergroup axioms for ``(R,+)``.

    Checks associativity and commutativity of the hyperaddition, that zero is
    a scalar identity (x+0 = {x}), that every element has a unique additive
    inverse, and reversibility (z in x+y implies y in -x+z and x in z-y).
    Failures are report entries with witnesses, never exceptions.
    """
    n = table.order
    add = table.add
    names = table.names
    rec = _Recorder(all_witnesses)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = 0
                for u in bits(add[x][y]):
                    lhs |= add[u][z]
                rhs = 0
                for v in bits(add[y][z]):
                    rhs |= add[x][v]
                if lhs != rhs:
                    rec.hit(
                        "add-associativity",
                        (x, y, z),
                        f"({names[x]}+{names[y]})+{names[z]} = {table.set_str(lhs)} "
                        f"but {names[x]}+({names[y]}+{names[z]}) = {table.set_str(rhs)}",
                    )

    for x in range(n):
        for y in range(x + 1, n):
            if add[x][y] != add[y][x]:
                rec.hit(
                    "add-commutativity",
                    (x, y),
                    f"{names[x]}+{names[y]} = {table.set_str(add[x][y])} "
                    f"but {names[y]}+{names[x]} = {table.set_str(add[y][x])}",
                )

    z0 = table.zero
    for x in range(n):
        if add[x][z0] != 1 << x or add[z0][x] != 1 << x:
            rec.hit(
                "zero-scalar-identity",
                (x,),
                f"{names[x]}+{names[z0]} = {table.set_str(add[x][z0])}, expected "
                f"{{{names[x]}}}",
            )

    zero_bit = 1 << z0
    inverses: list[int | None] = []
    for x in range(n):
        cands = [y for y in range(n) if add[x][y] & zero_bit]
        if len(cands) != 1:
            rec.hit(
                "unique-inverses",
                (x, *cands),
                f"{names[x]} has inverses {{{','.join(names[c] for c in cands)}}}, "
                "expected exactly one",
            )
            inverses.append(None)
        else:
            inverses.append(cands[0])

    for x in range(n):
        nx = inverses[x]
        for y in range(n):
            ny = inverses[y]
            for z in bits(add[x][y]):
                if nx is not None and not add[nx][z] & (1 << y):
                    rec.hit(
                        "reversibility",
                        (x, y, z),
                        f"{names[z]} in {names[x]}+{names[y]} but {names[y]} not in "
                        f"-{names[x]}+{names[z]}",
                    )
                if ny is not None and not add[z][ny] & (1 << x):
                    rec.hit(
                        "reversibility",
                        (x, y, z),
                        f"{names[z]} in {names[x]}+{names[y]} but {names[x]} not in "
                        f"{names[z]}-{names[y]}",
                    )

    return AxiomReport(CANONICAL_AXIOMS, rec.violations, rec.counts)


def validate_krasner_hyperring(
    table: HyperringTable, all_witnesses: bool = False
) -> AxiomReport:
    """Exhaustively decide all Krasner hyperring axioms.

    Runs the canonical hypergroup checks, then multiplicative associativity,
    bilateral absorption by zero, both setwise distributivity laws, and
    commutativity of the multiplication (this package works in the
    commutative theory; noncommutative tables fail with their own axiom id).
    """
    base = validate_canonical_hypergroup(table, all_witnesses)
    n = table.order
    add, mul = table.add, table.mul
    names = table.names
    rec = _Recorder(all_witnesses)
    rec.violations = base.violations
    rec.counts = base.counts

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    rec.hit(
                        "mul-associativity",
                        (x, y, z),
                        f"({names[x]}*{names[y]})*{names[z]} != "
                        f"{names[x]}*({names[y]}*{names[z]})",
                    )

    z0 = table.zero
    for x in range(n):
        if mul[x][z0] != z0 or mul[z0][x] != z0:
            rec.hit("zero-absorbing", (x,), f"{names[x]}*{names[z0]} != {names[z0]}")

    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = mask_of(mul[x][w] for w in bits(add[y][z]))
                if left != add[mul[x][y]][mul[x][z]]:
                    rec.hit(
                        "distributivity",
                        (x, y, z),
                        f"{names[x]}*({names[y]}+{names[z]}) = {table.set_str(left)} "
                        f"but {names[x]}*{names[y]} + {names[x]}*{names[z]} = "
                        f"{table.set_str(add[mul[x][y]][mul[x][z]])}",
                    )
                right = mask_of(mul[w][x] for w in bits(add[y][z]))
                if right != add[mul[y][x]][mul[z][x]]:
                    rec.hit(
                        "distributivity",
                        (x, y, z),
                        f"({names[y]}+{names[z]})*{names[x]} differs from "
                        f"{names[y]}*{names[x]} + {names[z]}*{names[x]}",
                    )

    for x in range(n):
        for y in range(x + 1, n):
            if mul[x][y] != mul[y][x]:
                rec.hit(
                    "mul-commutativity",
                    (x, y),
                    f"{names[x]}*{names[y]} != {names[y]}*{names[x]}",
                )

    return AxiomReport(CANONICAL_AXIOMS + KRASNER_AXIOMS, rec.violations, rec.counts)


def find_identity(table: HyperringTable) -> int | None:
    """Lowest two-sided multiplicative identity of the table, if any."""
    for e in range(table.order):
        if all(table.mul[e][x] == x and table.mul[x][e] == x for x in range(table.order)):
            return e
    return None
