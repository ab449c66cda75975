"""Hyperideals and the derived sets: annihilators, radicals, colons, lattice.

Ideals are carrier bitmasks.  A subset N is a hyperideal when it contains
zero, is closed under setwise differences x-y for x,y in N, and absorbs
multiplication by arbitrary elements.  Everything here is a pure function of
an immutable table, with per-table caches behind ``functools.lru_cache``;
results are deterministic and canonically sorted.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (
    ClassificationResult,
    HyperringTable,
    bits,
    hyper_sum,
    mask_of,
    negation_table,
)

#: Orders up to this bound use the exact full subset scan for enumeration;
#: larger carriers fall back to closing principal ideals under pairwise sums.
FULL_SCAN_ORDER = 16


class NotAHyperideal(ValueError):
    """A subset claimed to be a hyperideal is not one."""


@lru_cache(maxsize=None)
def _difference_table(table: HyperringTable) -> tuple[tuple[int, ...], ...]:
    """diff[x][y] = bitmask of x - y (x plus the unique inverse of y)."""
    neg = negation_table(table)
    return tuple(
        tuple(table.add[x][neg[y]] for y in range(table.order))
        for x in range(table.order)
    )


@lru_cache(maxsize=None)
def _column_masks(table: HyperringTable) -> tuple[int, ...]:
    """Per element x, the bitmask of all products r*x over the carrier."""
    n = table.order
    return tuple(mask_of(table.mul[r][x] for r in range(n)) for x in range(n))


@lru_cache(maxsize=None)
def _annihilator_of_element(table: HyperringTable) -> tuple[int, ...]:
    """Per element x, the bitmask of {r : r*x = 0}."""
    n, zero = table.order, table.zero
    return tuple(
        mask_of(r for r in range(n) if table.mul[r][x] == zero) for x in range(n)
    )


def is_hyperideal(table: HyperringTable, subset: int) -> ClassificationResult:
    """Decide the hyperideal criterion for a subset, with a witness on failure.

    True iff zero is a member, r*x stays inside for every member x and every
    carrier element r, and x-y is contained setwise for all members x, y.
    """
    zero_bit = 1 << table.zero
    if not subset & zero_bit:
        return ClassificationResult(False, {"missing": table.zero}, "zero is not a member")
    cols = _column_masks(table)
    for x in bits(subset):
        if cols[x] & ~subset:
            r = next(
                r for r in range(table.order) if not subset & (1 << table.mul[r][x])
            )
            nx, nr = table.names[x], table.names[r]
            return ClassificationResult(
                False, {"r": r, "x": x},
                f"not absorbing: {nr}*{nx}={table.names[table.mul[r][x]]} escapes",
            )
    diff = _difference_table(table)
    for x in bits(subset):
        row = diff[x]
        for y in bits(subset):
            if row[y] & ~subset:
                return ClassificationResult(
                    False, {"x": x, "y": y},
                    f"not closed under differences: {table.names[x]}-{table.names[y]} = "
                    f"{table.set_str(row[y])} escapes",
                )
    return ClassificationResult(True)


def require_hyperideal(table: HyperringTable, subset: int) -> int:
    """Return the mask unchanged or raise ``NotAHyperideal`` with the witness."""
    res = is_hyperideal(table, subset)
    if not res.verdict:
        raise NotAHyperideal(f"{table.set_str(subset)} in {table.label}: {res.note}")
    return subset


@lru_cache(maxsize=None)
def generated_hyperideal(table: HyperringTable, generators: int) -> int:
    """Least hyperideal containing the generators.

    Closes {zero} | generators under differences and arbitrary multiples
    until stable; the result is minimal among hyperideals containing the
    generators.
    """
    cols = _column_masks(table)
    diff = _difference_table(table)
    current = generators | (1 << table.zero)
    while True:
        grown = current
        for x in bits(current):
            grown |= cols[x]
        for x in bits(grown):
            row = diff[x]
            for y in bits(grown):
                grown |= row[y]
        if grown == current:
            return current
        current = grown


@lru_cache(maxsize=None)
def enumerate_hyperideals(table: HyperringTable) -> tuple[int, ...]:
    """All hyperideals of the table, sorted by (popcount, mask value).

    Small carriers are scanned exhaustively over every subset containing
    zero; larger ones close the principal ideals under pairwise ideal sums,
    which reaches every ideal because each is finitely generated.
    """
    n = table.order
    zero_bit = 1 << table.zero
    found: list[int] = []
    if n <= FULL_SCAN_ORDER:
        cols = _column_masks(table)
        diff = _difference_table(table)
        rest = [i for i in range(n) if i != table.zero]
        for combo in range(1 << (n - 1)):
            subset = zero_bit
            pick = combo
            bit = 0
            while pick:
                if pick & 1:
                    subset |= 1 << rest[bit]
                pick >>= 1
                bit += 1
            absorbed = 0
            for x in bits(subset):
                absorbed |= cols[x]
            if absorbed & ~subset:
                continue
            ok = True
            for x in bits(subset):
                row = diff[x]
                for y in bits(subset):
                    if row[y] & ~subset:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(subset)
    else:
        pool = {zero_bit}
        pool.update(generated_hyperideal(table, 1 << x) for x in range(n))
        frontier = list(pool)
        while frontier:
            fresh = []
            for a in frontier:
                for b in list(pool):
                    s = ideal_sum(table, a, b)
                    if s not in pool:
                        pool.add(s)
                        fresh.append(s)
            frontier = fresh
        found = list(pool)
    found.sort(key=lambda m: (m.bit_count(), m))
    return tuple(found)


def proper_hyperideals(table: HyperringTable) -> tuple[int, ...]:
    """The hyperideals excluding the full carrier, canonically sorted."""
    return tuple(m for m in enumerate_hyperideals(table) if m != table.carrier)


def annihilator(table: HyperringTable, subset: int) -> int:
    """ann(S) = {r : r*s = 0 for all s in S}; the full carrier for empty S."""
    ann = _annihilator_of_element(table)
    out = table.carrier
    for s in bits(subset):
        out &= ann[s]
    return out


@lru_cache(maxsize=None)
def regulars(table: HyperringTable) -> tuple[int, int]:
    """(regular elements, zero divisors) as masks; they partition the carrier.

    An element is regular when its annihilator is exactly {zero}.
    """
    ann = _annihilator_of_element(table)
    zero_bit = 1 << table.zero
    regular = mask_of(a for a in range(table.order) if ann[a] == zero_bit)
    return regular, table.carrier ^ regular


@lru_cache(maxsize=None)
def radical(table: HyperringTable, ideal: int) -> int:
    """sqrt(N) = elements with some power in N (exponents up to the order).

    On a finite carrier the power sequence of any element repeats within
    ``order`` steps, so the exponent bound is exhaustive.
    """
    out = 0
    for r in range(table.order):
        p = r
        for _ in range(table.order):
            if ideal & (1 << p):
                out |= 1 << r
                break
            p = table.mul[p][r]
    return out


def colon(table: HyperringTable, ideal: int, subset: int) -> int:
    """(N : S) = {x : s*x in N for every s in S}; S must be nonempty."""
    if subset == 0:
        raise ValueError("colon ideal needs a nonempty subset")
    out = 0
    for x in range(table.order):
        if all(ideal & (1 << table.mul[s][x]) for s in bits(subset)):
            out |= 1 << x
    return out


@lru_cache(maxsize=None)
def ideal_sum(table: HyperringTable, a: int, b: int) -> int:
    """Sum of hyperideals: the ideal generated by the setwise hypersum."""
    return generated_hyperideal(table, hyper_sum(table, a, b))


@lru_cache(maxsize=None)
def ideal_product(table: HyperringTable, a: int, b: int) -> int:
    """Product of hyperideals: generated by all pairwise element products."""
    gens = 0
    for j in bits(a):
        row = table.mul[j]
        for k in bits(b):
            gens |= 1 << row[k]
    return generated_hyperideal(table, gens)


def ideal_intersection(table: HyperringTable, a: int, b: int) -> int:
    """Intersection of hyperideals (already an ideal; plain mask and)."""
    return a & b


def ideal_power(table: HyperringTable, ideal: int, k: int) -> int:
    """k-th ideal power, k >= 1."""
    if k < 1:
        raise ValueError("ideal power needs k >= 1")
    out = ideal
    for _ in range(k - 1):
        out = ideal_product(table, out, ideal)
    return out


def ideal_arith(table: HyperringTable, op: str, *args) -> int:
    """Dispatcher over the ideal arithmetic: sum, product, intersection, power."""
    if op == "sum":
        return ideal_sum(table, *args)
    if op == "product":
        return ideal_product(table, *args)
    if op == "intersection":
        return ideal_intersection(table, *args)
    if op == "power":
        return ideal_power(table, *args)
    raise ValueError(f"unknown ideal operation {op!r}")


def is_prime_mask(table: HyperringTable, ideal: int) -> bool:
    """Raw primality: proper, and a*b in N forces a in N or b in N."""
    if ideal == table.carrier:
        return False
    for a in range(table.order):
        if ideal & (1 << a):
            continue
        row = table.mul[a]
        for b in range(table.order):
            if ideal & (1 << row[b]) and not ideal & (1 << b):
                return False
    return True


def minimal_primes_over(table: HyperringTable, ideal: int) -> tuple[int, ...]:
    """Minimal prime hyperideals containing N, from the enumerated lattice.

    Empty when no prime contains N (possible without a multiplicative
    identity); callers report that instead of failing.
    """
    primes = [
        p for p in enumerate_hyperideals(table)
        if ideal & ~p == 0 and is_prime_mask(table, p)
    ]
    return tuple(
        p for p in primes
        if not any(q != p and q & ~p == 0 for q in primes)
    )


def minimal_nonzero_hyperideals(table: HyperringTable) -> tuple[int, ...]:
    """Atoms of the lattice of nonzero hyperideals (the carrier may qualify)."""
    zero_only = 1 << table.zero
    nonzero = [m for m in enumerate_hyperideals(table) if m != zero_only]
    return tuple(
        m for m in nonzero
        if not any(q != m and q & ~m == 0 for q in nonzero)
    )


def socle(table: HyperringTable) -> int:
    """Ideal sum of all minimal nonzero hyperideals; {zero} if none exist."""
    out = 1 << table.zero
    for m in minimal_nonzero_hyperideals(table):
        out = ideal_sum(table, out, m)
    return out


def idempotents(table: HyperringTable) -> tuple[int, ...]:
    """Elements with e*e = e, ascending."""
    return tuple(e for e in range(table.order) if table.mul[e][e] == e)
