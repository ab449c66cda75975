"""Quotient hyperrings, good homomorphisms and ideal transport.

A good homomorphism preserves the hyperaddition setwise exactly
(f(x+y) = f(x)+f(y) as sets, not merely an inclusion) and the multiplication
on the nose.  Quotients are taken by hyperideals; the coset hypersum classes
partition the carrier and the projection is itself a good epimorphism, which
the construction verifies rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    AxiomReport,
    HyperringTable,
    Violation,
    bits,
    find_identity,
    hyper_sum,
    mask_of,
    validate_krasner_hyperring,
)
from .ideals import generated_hyperideal, require_hyperideal


class IllFormedQuotient(Exception):
    """Coset structure failed (diagnostic; not expected on validated inputs)."""


@dataclass(frozen=True)
class GoodHomomorphism:
    """A carrier map between two tables, candidate good homomorphism."""

    source: HyperringTable
    target: HyperringTable
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.mapping[x] for x in bits(mask))

    @property
    def kernel(self) -> int:
        return mask_of(
            x for x in range(self.source.order) if self.mapping[x] == self.target.zero
        )


@dataclass
class HomReport:
    """Validation outcome for a candidate good homomorphism."""

    report: AxiomReport
    surjective: bool
    injective: bool
    kernel: int

    @property
    def passed(self) -> bool:
        return self.report.passed


def identity_homomorphism(table: HyperringTable) -> GoodHomomorphism:
    return GoodHomomorphism(table, table, tuple(range(table.order)))


def validate_good_homomorphism(hom: GoodHomomorphism) -> HomReport:
    """Exhaustively check zero preservation, setwise additivity, multiplicativity."""
    src, tgt, m = hom.source, hom.target, hom.mapping
    violations: list[Violation] = []
    counts: dict[str, int] = {}

    def hit(axiom: str, witness: tuple[int, ...], message: str) -> None:
        counts[axiom] = counts.get(axiom, 0) + 1
        if counts[axiom] == 1:
            violations.append(Violation(axiom, witness, message))

    if len(m) != src.order or any(not 0 <= v < tgt.order for v in m):
        raise ValueError("mapping must send every source element to a target element")
    if m[src.zero] != tgt.zero:
        hit("hom-zero", (src.zero,), "zero is not sent to zero")
    for x in range(src.order):
        for y in range(src.order):
            if hom.image_mask(src.add[x][y]) != tgt.add[m[x]][m[y]]:
                hit(
                    "hom-additive",
                    (x, y),
                    f"f({src.names[x]}+{src.names[y]}) != f({src.names[x]})+f({src.names[y]}) setwise",
                )
            if m[src.mul[x][y]] != tgt.mul[m[x]][m[y]]:
                hit(
                    "hom-multiplicative",
                    (x, y),
                    f"f({src.names[x]}*{src.names[y]}) != f({src.names[x]})*f({src.names[y]})",
                )

    report = AxiomReport(("hom-zero", "hom-additive", "hom-multiplicative"), violations, counts)
    return HomReport(
        report=report,
        surjective=len(set(m)) == tgt.order,
        injective=len(set(m)) == src.order,
        kernel=hom.kernel,
    )


@dataclass(frozen=True)
class QuotientPresentation:
    """A quotient table R/N plus the coset bookkeeping and projection."""

    ring: HyperringTable
    coset_of: tuple[int, ...]
    coset_members: tuple[int, ...]
    projection: GoodHomomorphism


@lru_cache(maxsize=None)
def quotient(table: HyperringTable, ideal: int) -> QuotientPresentation:
    """Quotient by a proper hyperideal, with verified coset structure.

    Classes are the hypersums x+N; class(x) (+) class(y) collects the classes
    of x+y and class(x)*class(y) is the class of x*y.  Representative
    independence and the hyperring axioms of the result are checked, and the
    projection map is returned as a good epimorphism.
    """
    require_hyperideal(table, ideal)
    if ideal == table.carrier:
        raise ValueError("quotient by the improper hyperideal is trivial; not built")

    n = table.order
    coset_mask: list[int] = [hyper_sum(table, 1 << x, ideal) for x in range(n)]
    classes: list[int] = []
    coset_of: list[int] = [-1] * n
    for x in range(n):
        cm = coset_mask[x]
        if not cm & (1 << x):
            raise IllFormedQuotient(f"{table.names[x]} escapes its own coset")
        try:
            coset_of[x] = classes.index(cm)
        except ValueError:
            for other in classes:
                if other & cm:
                    raise IllFormedQuotient(
                        f"cosets {table.set_str(other)} and {table.set_str(cm)} overlap"
                    ) from None
            coset_of[x] = len(classes)
            classes.append(cm)

    q = len(classes)
    reps = [min(bits(cm)) for cm in classes]
    add_q = [[0] * q for _ in range(q)]
    mul_q = [[0] * q for _ in range(q)]
    for c1 in range(q):
        for c2 in range(q):
            expected_add: int | None = None
            expected_mul: int | None = None
            for x in bits(classes[c1]):
                for y in bits(classes[c2]):
                    got_add = mask_of(coset_of[z] for z in bits(table.add[x][y]))
                    got_mul = coset_of[table.mul[x][y]]
                    if expected_add is None:
                        expected_add, expected_mul = got_add, got_mul
                    elif (got_add, got_mul) != (expected_add, expected_mul):
                        raise IllFormedQuotient(
                            f"cells over classes ({c1},{c2}) depend on representatives "
                            f"(witness {table.names[x]},{table.names[y]})"
                        )
            add_q[c1][c2] = expected_add
            mul_q[c1][c2] = expected_mul

    names = tuple(f"[{table.names[r]}]" for r in reps)
    ring = HyperringTable(
        order=q,
        names=names,
        add=tuple(tuple(row) for row in add_q),
        mul=tuple(tuple(row) for row in mul_q),
        zero=coset_of[table.zero],
        one=None,
        label=f"{table.label}/{table.set_str(ideal)}",
    )
    e = coset_of[table.one] if table.one is not None else find_identity(ring)
    if e is not None:
        ring = HyperringTable(
            order=q, names=names, add=ring.add, mul=ring.mul,
            zero=ring.zero, one=e, label=ring.label,
        )

    check = validate_krasner_hyperring(ring)
    if not check.passed:
        first = check.violations[0]
        raise IllFormedQuotient(f"quotient breaks {first.axiom}: {first.message}")

    projection = GoodHomomorphism(table, ring, tuple(coset_of))
    hom = validate_good_homomorphism(projection)
    if not (hom.passed and hom.surjective):
        raise IllFormedQuotient("projection is not a good epimorphism")

    return QuotientPresentation(
        ring=ring,
        coset_of=tuple(coset_of),
        coset_members=tuple(classes),
        projection=projection,
    )


def transport_ideal(hom: GoodHomomorphism, direction: str, ideal: int) -> int:
    """Move an ideal along a homomorphism.

    ``image`` takes the pointwise image closed to a generated hyperideal in
    the target (already closed under a good epimorphism); ``preimage`` pulls
    back membership and is always a hyperideal.
    """
    if direction == "image":
        return generated_hyperideal(hom.target, hom.image_mask(ideal))
    if direction == "preimage":
        return mask_of(
            x for x in range(hom.source.order) if ideal & (1 << hom.mapping[x])
        )
    raise ValueError(f"unknown transport direction {direction!r}")


def _signatures(table: HyperringTable) -> list[tuple]:
    """Per-element invariants that any isomorphism must respect."""
    n = table.order
    identity = table.one if table.one is not None else find_identity(table)
    sigs = []
    for x in range(n):
        add_pops = tuple(sorted(table.add[x][y].bit_count() for y in range(n)))
        zero_products = sum(1 for y in range(n) if table.mul[x][y] == table.zero)
        sigs.append(
            (
                x == table.zero,
                x == identity,
                add_pops,
                zero_products,
                table.mul[x][x] == x,
                bool(table.add[x][x] & (1 << table.zero)),
            )
        )
    return sigs


def find_isomorphism(a: HyperringTable, b: HyperringTable) -> tuple[int, ...] | None:
    """Brute-force bijection search with signature and partial-table pruning.

    Returns a carrier bijection (as a tuple indexed by elements of ``a``) or
    None.  Intended for small orders; zero and identity images are pinned
    first and candidates are filtered by local invariants.  The identity is
    detected from the multiplication, so a declared ``one`` on only one side
    does not spoil the comparison.
    """
    if a.order != b.order:
        return None
    sig_a, sig_b = _signatures(a), _signatures(b)
    candidates = [
        [u for u in range(b.order) if sig_b[u] == sig_a[x]] for x in range(a.order)
    ]
    if any(not c for c in candidates):
        return None

    n = a.order
    order_of_assign = sorted(range(n), key=lambda x: len(candidates[x]))
    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        for y in range(n):
            if mapping[y] < 0:
                continue
            if a.add[x][y].bit_count() != b.add[mapping[x]][mapping[y]].bit_count():
                return False
            for pair in ((x, y), (y, x)):
                img = 0
                full = True
                for z in bits(a.add[pair[0]][pair[1]]):
                    if mapping[z] < 0:
                        full = False
                    else:
                        img |= 1 << mapping[z]
                cell = b.add[mapping[pair[0]]][mapping[pair[1]]]
                if img & ~cell:
                    return False
                if full and img != cell:
                    return False
                p = a.mul[pair[0]][pair[1]]
                q = b.mul[mapping[pair[0]]][mapping[pair[1]]]
                if mapping[p] >= 0 and mapping[p] != q:
                    return False
        return True

    def verify() -> bool:
        for x in range(n):
            for y in range(n):
                if mask_of(mapping[z] for z in bits(a.add[x][y])) != b.add[mapping[x]][mapping[y]]:
                    return False
                if mapping[a.mul[x][y]] != b.mul[mapping[x]][mapping[y]]:
                    return False
        return True

    def backtrack(i: int) -> bool:
        if i == n:
            return verify()
        x = order_of_assign[i]
        for u in candidates[x]:
            if used[u]:
                continue
            mapping[x] = u
            used[u] = True
            if consistent(x) and backtrack(i + 1):
                return True
            used[u] = False
            mapping[x] = -1
        return False

    if backtrack(0):
        return tuple(mapping)
    return None


def is_isomorphic(a: HyperringTable, b: HyperringTable) -> bool:
    return find_isomorphism(a, b) is not None
