"""Ideal-class predicates: classical, the r-family, special classes, φ-family.

Every predicate takes a proper hyperideal (as a bitmask) and returns a
``ClassificationResult`` carrying a witness on failure.  Predicates whose
premise never fires report verdict True with note ``"vacuous"``; reports
surface that so tallies are not misread.  Witnesses are the first failing
tuple in lexicographic order, for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import ClassificationResult, HyperringTable, bits
from .ideals import (
    annihilator,
    enumerate_hyperideals,
    ideal_power,
    ideal_product,
    proper_hyperideals,
    radical,
    regulars,
    _annihilator_of_element,
)


class NotProper(ValueError):
    """The predicate is only defined for proper hyperideals."""


def _require_proper(table: HyperringTable, ideal: int) -> None:
    if ideal == table.carrier:
        raise NotProper(f"the improper hyperideal of {table.label} has no class here")


@dataclass(frozen=True)
class PhiReducer:
    """A named reduction sending each hyperideal N to a sub-ideal (or Empty).

    Kinds: ``empty`` (the distinguished Empty value, so N - phi(N) = N),
    ``zero`` ({0}), ``identity`` (N itself), ``power`` (N^n, n >= 2) and
    ``omega`` (the intersection of all powers, a finite-carrier fixed point).
    """

    kind: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("empty", "zero", "identity", "power", "omega"):
            raise ValueError(f"unknown reducer kind {self.kind!r}")
        if self.kind == "power" and (self.n is None or self.n < 2):
            raise ValueError("power reducer needs n >= 2")

    @property
    def name(self) -> str:
        if self.kind == "empty":
            return "phi_empty"
        if self.kind == "zero":
            return "phi_0"
        if self.kind == "identity":
            return "phi_1"
        if self.kind == "power":
            return f"phi_{self.n}"
        return "phi_omega"

    def __str__(self) -> str:
        return self.name


PHI_EMPTY = PhiReducer("empty")
PHI_0 = PhiReducer("zero")
PHI_1 = PhiReducer("identity")
PHI_OMEGA = PhiReducer("omega")


def phi_power(n: int) -> PhiReducer:
    return PhiReducer("power", n)


#: The reducers every corpus sweep runs: empty, 0, 1, squares, cubes, omega.
STANDARD_PHIS = (PHI_EMPTY, PHI_0, PHI_1, phi_power(2), phi_power(3), PHI_OMEGA)


def parse_phi(text: str) -> PhiReducer:
    """Reducer from CLI spellings: empty, 0, 1, omega/w, n:K or a bare K >= 2."""
    t = text.strip().lower()
    if t in ("empty", "e"):
        return PHI_EMPTY
    if t == "0":
        return PHI_0
    if t == "1":
        return PHI_1
    if t in ("omega", "w"):
        return PHI_OMEGA
    if t.startswith("n:"):
        t = t[2:]
    if t.isdigit() and int(t) >= 2:
        return phi_power(int(t))
    raise ValueError(f"unknown phi reducer {text!r}")


def apply_phi(table: HyperringTable, phi: PhiReducer, ideal: int) -> int | None:
    """phi(N) as a mask, or None for the distinguished Empty value.

    Always phi(N) contained in N (Empty counts as smallest).
    """
    _require_proper(table, ideal)
    if phi.kind == "empty":
        return None
    if phi.kind == "zero":
        return 1 << table.zero
    if phi.kind == "identity":
        return ideal
    if phi.kind == "power":
        return ideal_power(table, ideal, phi.n)
    current = ideal
    while True:
        nxt = ideal_product(table, current, ideal)
        if nxt == current:
            return current
        current = nxt


def phi_subset(a: int | None, b: int | None) -> bool:
    """Containment with the Empty marker as strict bottom."""
    if a is None:
        return True
    if b is None:
        return False
    return a & ~b == 0


def premise_mask(ideal: int, phi_value: int | None) -> int:
    """N - phi(N) as a mask of products eligible to fire a phi-premise."""
    return ideal if phi_value is None else ideal & ~phi_value


@dataclass(frozen=True)
class ClassicalClassification:
    prime: ClassificationResult
    maximal: ClassificationResult
    primary: ClassificationResult


def classify_classical(table: HyperringTable, ideal: int) -> ClassicalClassification:
    """Prime, maximal and primary flags with witnesses.

    Maximality means no proper hyperideal sits strictly between N and the
    carrier, decided against the enumerated lattice.
    """
    _require_proper(table, ideal)
    n = table.order
    names = table.names
    rad = radical(table, ideal)

    prime = ClassificationResult(True)
    for a in range(n):
        if prime.verdict:
            for b in range(n):
                p = table.mul[a][b]
                if ideal & (1 << p) and not ideal & (1 << a) and not ideal & (1 << b):
                    prime = ClassificationResult(
                        False, {"a": a, "b": b},
                        f"{names[a]}*{names[b]}={names[p]} lies in N but neither factor does",
                    )
                    break

    primary = ClassificationResult(True)
    for a in range(n):
        if primary.verdict:
            for b in range(n):
                p = table.mul[a][b]
                if ideal & (1 << p) and not ideal & (1 << a) and not rad & (1 << b):
                    primary = ClassificationResult(
                        False, {"a": a, "b": b},
                        f"{names[a]}*{names[b]} in N, {names[a]} not in N, "
                        f"{names[b]} not in sqrt(N)",
                    )
                    break

    maximal = ClassificationResult(True)
    for m in proper_hyperideals(table):
        if m != ideal and ideal & ~m == 0:
            maximal = ClassificationResult(
                False, {"between": tuple(bits(m))},
                f"{table.set_str(m)} sits strictly between N and the carrier",
            )
            break

    return ClassicalClassification(prime, maximal, primary)


def is_r_hyperideal(table: HyperringTable, ideal: int) -> ClassificationResult:
    """r-hyperideal: a*b in N with ann(a) = 0 forces b in N."""
    _require_proper(table, ideal)
    regular, _ = regulars(table)
    names = table.names
    fired = False
    for a in bits(regular):
        row = table.mul[a]
        for b in range(table.order):
            if ideal & (1 << row[b]):
                fired = True
                if not ideal & (1 << b):
                    return ClassificationResult(
                        False, {"a": a, "b": b},
                        f"{names[a]}·{names[b]}={names[row[b]]}, ann({names[a]})=0, "
                        f"{names[b]}∉N",
                    )
    return ClassificationResult(True, note="" if fired else "vacuous")


def is_pr_hyperideal(table: HyperringTable, ideal: int) -> ClassificationResult:
    """pr-hyperideal: a*b in N with ann(a) = 0 forces some power of b into N."""
    _require_proper(table, ideal)
    regular, _ = regulars(table)
    rad = radical(table, ideal)
    names = table.names
    fired = False
    for a in bits(regular):
        row = table.mul[a]
        for b in range(table.order):
            if ideal & (1 << row[b]):
                fired = True
                if not rad & (1 << b):
                    return ClassificationResult(
                        False, {"a": a, "b": b},
                        f"{names[a]}·{names[b]}={names[row[b]]}, ann({names[a]})=0, "
                        f"no power of {names[b]} lands in N",
                    )
    return ClassificationResult(True, note="" if fired else "vacuous")


@dataclass(frozen=True)
class SpecialClassification:
    z0: ClassificationResult
    pure: ClassificationResult
    vn_regular: ClassificationResult


def classify_special(table: HyperringTable, ideal: int) -> SpecialClassification:
    """z0, pure and von Neumann regular flags with witnesses.

    z0: members are determined up to annihilator (ann(a) = ann(b), a in N
    puts b in N).  pure: every member a has some b in N with a = a*b.
    von Neumann regular: every member a lies in a*R*a.
    """
    _require_proper(table, ideal)
    names = table.names
    ann = _annihilator_of_element(table)

    z0 = ClassificationResult(True)
    for a in bits(ideal):
        if z0.verdict:
            for b in range(table.order):
                if ann[a] == ann[b] and not ideal & (1 << b):
                    z0 = ClassificationResult(
                        False, {"a": a, "b": b},
                        f"ann({names[a]})=ann({names[b]}) but {names[b]}∉N",
                    )
                    break

    pure = ClassificationResult(True)
    for a in bits(ideal):
        if not any(table.mul[a][b] == a for b in bits(ideal)):
            pure = ClassificationResult(
                False, {"a": a}, f"no b∈N with {names[a]}·b={names[a]}"
            )
            break

    vnr = ClassificationResult(True)
    for a in bits(ideal):
        if not any(table.mul[table.mul[a][r]][a] == a for r in range(table.order)):
            vnr = ClassificationResult(
                False, {"a": a}, f"{names[a]} is not in {names[a]}·R·{names[a]}"
            )
            break

    return SpecialClassification(z0, pure, vnr)


PHI_CLASSES = ("r", "pr", "prime", "primary", "pure", "vnr", "strongly_r")


def phi_class_with_value(
    table: HyperringTable, ideal: int, phi_value: int | None, cls: str
) -> ClassificationResult:
    """Evaluate a phi-class against an explicitly supplied phi(N) value.

    Used directly by quotient transport, where the reducer on the quotient is
    induced from the base ring rather than recomputed.
    """
    _require_proper(table, ideal)
    prem = premise_mask(ideal, phi_value)
    names = table.names
    n = table.order
    fired = False

    if cls in ("r", "pr"):
        regular, _ = regulars(table)
        target = ideal if cls == "r" else radical(table, ideal)
        for a in bits(regular):
            row = table.mul[a]
            for b in range(n):
                if prem & (1 << row[b]):
                    fired = True
                    if not target & (1 << b):
                        tail = "∉N" if cls == "r" else "has no power in N"
                        return ClassificationResult(
                            False, {"a": a, "b": b},
                            f"{names[a]}·{names[b]}={names[row[b]]}∈N−φ(N), "
                            f"ann({names[a]})=0, {names[b]} {tail}",
                        )
        return ClassificationResult(True, note="" if fired else "vacuous")

    if cls in ("prime", "primary"):
        target = ideal if cls == "prime" else radical(table, ideal)
        for a in range(n):
            row = table.mul[a]
            for b in range(n):
                if prem & (1 << row[b]):
                    fired = True
                    if not ideal & (1 << a) and not target & (1 << b):
                        return ClassificationResult(
                            False, {"a": a, "b": b},
                            f"{names[a]}·{names[b]}∈N−φ(N) but neither side lands in "
                            + ("N" if cls == "prime" else "N / sqrt(N)"),
                        )
        return ClassificationResult(True, note="" if fired else "vacuous")

    if cls == "pure":
        for a in bits(prem):
            fired = True
            if not any(table.mul[a][b] == a for b in bits(ideal)):
                return ClassificationResult(
                    False, {"a": a}, f"no b∈N with {names[a]}·b={names[a]}"
                )
        return ClassificationResult(True, note="" if fired else "vacuous")

    if cls == "vnr":
        for a in bits(prem):
            fired = True
            sq = table.mul[a][a]
            if not any(table.mul[sq][b] == a for b in bits(ideal)):
                return ClassificationResult(
                    False, {"a": a}, f"no b∈N with {names[a]}²·b={names[a]}"
                )
        return ClassificationResult(True, note="" if fired else "vacuous")

    if cls == "strongly_r":
        zero_bit = 1 << table.zero
        lattice = enumerate_hyperideals(table)
        for j in lattice:
            if annihilator(table, j) != zero_bit:
                continue
            for k in lattice:
                prod = ideal_product(table, j, k)
                if prod & ~ideal:
                    continue
                escapes_phi = True if phi_value is None else bool(prod & ~phi_value)
                if not escapes_phi:
                    continue
                fired = True
                if k & ~ideal:
                    return ClassificationResult(
                        False, {"J": tuple(bits(j)), "K": tuple(bits(k))},
                        f"J·K⊆N−φ(N) with ann(J)=0 but K={table.set_str(k)}⊄N",
                    )
        return ClassificationResult(True, note="" if fired else "vacuous")

    raise ValueError(f"unknown phi class {cls!r}")


def is_phi_class(
    table: HyperringTable, ideal: int, phi: PhiReducer, cls: str
) -> ClassificationResult:
    """Evaluate one of the phi-relativized classes for a proper ideal.

    The premise of the underlying implication is restricted to N - phi(N);
    the Empty reducer imposes no restriction at all.
    """
    return phi_class_with_value(table, ideal, apply_phi(table, phi, ideal), cls)


@dataclass(frozen=True)
class RingConditions:
    property_a: ClassificationResult
    annihilator_condition: ClassificationResult
    sac: ClassificationResult
    reduced: ClassificationResult
    hyperdomain: ClassificationResult


@lru_cache(maxsize=None)
def ring_conditions(table: HyperringTable) -> RingConditions:
    """Ring-level flags, quantified over the whole (finite) ideal lattice.

    Every hyperideal of a finite table is finitely generated, so Property A,
    the annihilator condition, and the strong annihilator condition quantify
    over the full lattice.
    """
    zero_bit = 1 << table.zero
    _, zd = regulars(table)
    lattice = enumerate_hyperideals(table)
    ann_elem = _annihilator_of_element(table)

    prop_a = ClassificationResult(True)
    for m in lattice:
        if m & ~zd == 0 and annihilator(table, m) == zero_bit:
            prop_a = ClassificationResult(
                False, {"N": tuple(bits(m))},
                f"{table.set_str(m)} lies in zd(R) but has zero annihilator",
            )
            break

    anncond = ClassificationResult(True)
    sac = ClassificationResult(True)
    for m in lattice:
        target = annihilator(table, m)
        if not any(ann_elem[a] == target for a in range(table.order)):
            if anncond.verdict:
                anncond = ClassificationResult(
                    False, {"N": tuple(bits(m))},
                    f"ann({table.set_str(m)}) is realized by no single element",
                )
        if not any(ann_elem[a] == target for a in bits(m)):
            if sac.verdict:
                sac = ClassificationResult(
                    False, {"N": tuple(bits(m))},
                    f"ann({table.set_str(m)}) is realized by no member",
                )

    nil = radical(table, zero_bit)
    if nil == zero_bit:
        reduced = ClassificationResult(True)
    else:
        wit = next(i for i in bits(nil) if i != table.zero)
        reduced = ClassificationResult(
            False, {"x": wit}, f"{table.names[wit]} is a nonzero nilpotent"
        )

    if zd & ~zero_bit == 0:
        hyperdomain = ClassificationResult(True)
    else:
        wit = next(i for i in bits(zd) if i != table.zero)
        hyperdomain = ClassificationResult(
            False, {"x": wit}, f"{table.names[wit]} is a nonzero zero divisor"
        )

    return RingConditions(prop_a, anncond, sac, reduced, hyperdomain)
