"""Corpus generation: builders, exhaustive tiny enumeration, random sampling.

The default corpus is deterministic: classical Z_n rings, the order-3
hyperfield H3, componentwise products, every Krasner hyperring of order two
and three up to isomorphism, and all quotients of those by each proper
hyperideal.  Every entry passes ``validate_krasner_hyperring`` before it is
admitted; candidate tables that fail (notably the finite chain analogs with
min multiplication, which break distributivity) are deliberately not corpus
members and are only examined by the dedicated falsification checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .core import (
    HyperringTable,
    bits,
    validate_canonical_hypergroup,
    validate_krasner_hyperring,
)
from .constructions import find_isomorphism, quotient, GoodHomomorphism
from .dsl import classical_zn, parse_hyperring, product
from .ideals import proper_hyperideals


class OrderTooLarge(ValueError):
    """Enumeration asked for an order beyond its supported bound."""


#: Order-3 hyperfield over {0, 1, a}: 1+1 is the whole carrier, a+a = {0,a},
#: a*a = 0.  Transcribed by hand; validated on corpus admission.
_H3_SOURCE = """
hyperring H3
elements: 0 1 a
zero: 0
one: 1
add:
  0 0 -> {0}
  0 1 -> {1}
  0 a -> {a}
  1 1 -> {0,1,a}
  1 a -> {1}
  a a -> {0,a}
mul:
  0 0 -> 0
  0 1 -> 0
  0 a -> 0
  1 1 -> 1
  1 a -> a
  a a -> 0
"""


@lru_cache(maxsize=None)
def h3() -> HyperringTable:
    """The order-3 hyperring H3 = {0, 1, a} with B = {0, a} its key ideal."""
    return parse_hyperring(_H3_SOURCE)


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus member: a validated table plus provenance bookkeeping.

    ``factors`` names the factor entries when the ring was built as a
    componentwise product (used to derive the corpus embeddings).
    """

    id: str
    ring: HyperringTable
    provenance: str  # builder | exhaustive | file
    factors: tuple[str, str] | None = None


_ENUM_NAMES = ("0", "a", "b", "c", "d", "e")


def _involutions(points: tuple[int, ...]):
    """All involutions of the point set, as dicts, deterministic order."""
    if not points:
        yield {}
        return
    x, rest = points[0], points[1:]
    for tail in _involutions(rest):
        yield {x: x, **tail}
    for i, y in enumerate(rest):
        reduced = rest[:i] + rest[i + 1 :]
        for tail in _involutions(reduced):
            yield {x: y, y: x, **tail}


def _free_pairs(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(1, n) for y in range(x, n)]


def _subset_options(n: int, needs_zero: bool) -> list[int]:
    """Nonempty carrier subsets filtered on zero membership, ascending."""
    out = []
    for m in range(1, 1 << n):
        if bool(m & 1) == needs_zero:
            out.append(m)
    return out


def _add_table_from_cells(n: int, cells: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        rows[x][0] = 1 << x
        rows[0][x] = 1 << x
    for (x, y), m in cells.items():
        rows[x][y] = m
        rows[y][x] = m
    return tuple(tuple(r) for r in rows)


def _candidate(n: int, add, mul_rows, label: str) -> HyperringTable:
    e = None
    for cand in range(n):
        if all(mul_rows[cand][x] == x and mul_rows[x][cand] == x for x in range(n)):
            e = cand
            break
    return HyperringTable(
        order=n, names=_ENUM_NAMES[:n], add=add,
        mul=tuple(tuple(r) for r in mul_rows), zero=0, one=e, label=label,
    )


def _canonical_add_tables(n: int):
    """Yield all hyperaddition tables that pass the canonical axioms, zero = 0.

    Cells involving zero are forced by the scalar-identity law; the inverse
    pairing is enumerated as an involution, which pins exactly which cells
    contain zero.  Remaining freedom is searched outright and filtered by the
    full canonical check.
    """
    pairs = _free_pairs(n)
    for sigma in _involutions(tuple(range(1, n))):
        option_lists = [
            _subset_options(n, needs_zero=(sigma[x] == y)) for x, y in pairs
        ]
        for choice in iproduct(*option_lists):
            cells = dict(zip(pairs, choice))
            add = _add_table_from_cells(n, cells)
            probe = HyperringTable(
                order=n, names=_ENUM_NAMES[:n], add=add,
                mul=tuple(tuple(0 for _ in range(n)) for _ in range(n)),
                zero=0, one=None, label="probe",
            )
            if validate_canonical_hypergroup(probe).passed:
                yield add


def _mul_tables(n: int, add) -> list[tuple[tuple[int, ...], ...]]:
    """All commutative multiplications making (add, mul) a Krasner hyperring."""
    pairs = _free_pairs(n)
    found = []
    for values in iproduct(range(n), repeat=len(pairs)):
        rows = [[0] * n for _ in range(n)]
        for (x, y), v in zip(pairs, values):
            rows[x][y] = v
            rows[y][x] = v
        table = HyperringTable(
            order=n, names=_ENUM_NAMES[:n], add=add,
            mul=tuple(tuple(r) for r in rows), zero=0, one=None, label="probe",
        )
        if validate_krasner_hyperring(table).passed:
            found.append(tuple(tuple(r) for r in rows))
    return found


def enumerate_hyperrings(
    order: int, mode: str = "exhaustive", seed: int = 0, count: int = 10
):
    """Stream Krasner hyperrings of one order, deduplicated up to isomorphism.

    ``exhaustive`` mode (order <= 3) is complete for its order.  ``random``
    mode (order <= 6) draws seeded samples of canonical hypergroups, then
    backtracks for a compatible multiplication; the stream is a pure function
    of the seed.  Every yielded table passed ``validate_krasner_hyperring``.
    """
    if order < 2:
        raise OrderTooLarge("enumeration starts at order 2")
    if mode == "exhaustive":
        if order > 3:
            raise OrderTooLarge("exhaustive enumeration is supported up to order 3")
        yield from _exhaustive(order)
    elif mode == "random":
        if order > 6:
            raise OrderTooLarge("random enumeration is supported up to order 6")
        yield from _random_stream(order, seed, count)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")


def _exhaustive(order: int):
    reps: list[HyperringTable] = []
    for add in _canonical_add_tables(order):
        for mul_rows in _mul_tables(order, add):
            cand = _candidate(order, add, [list(r) for r in mul_rows], "probe")
            if any(find_isomorphism(cand, rep) for rep in reps):
                continue
            labeled = HyperringTable(
                order=cand.order, names=cand.names, add=cand.add, mul=cand.mul,
                zero=cand.zero, one=cand.one, label=f"E{order}_{len(reps)}",
            )
            reps.append(labeled)
            yield labeled


def _random_stream(order: int, seed: int, count: int):
    rng = random.Random(seed)
    n = order
    pairs = _free_pairs(n)
    reps: list[HyperringTable] = []
    attempts = 0
    max_attempts = 2000 * max(count, 1)

    def cell_of(cells: dict, x: int, y: int) -> int | None:
        if x == 0 or y == 0:
            return 1 << (x | y)  # scalar-identity cells are forced
        return cells.get((x, y) if x <= y else (y, x))

    while len(reps) < count and attempts < max_attempts:
        attempts += 1
        points = list(range(1, n))
        rng.shuffle(points)
        sigma = {0: 0}
        while points:
            x = points.pop()
            if points and rng.random() < 0.5:
                y = points.pop(rng.randrange(len(points)))
                sigma[x], sigma[y] = y, x
            else:
                sigma[x] = x
        cells: dict[tuple[int, int], int] = {}
        dead = False
        for x, y in pairs:
            opts = _subset_options(n, needs_zero=(sigma[x] == y))
            chosen = rng.choice(opts)
            cells[(x, y)] = chosen
            # fail fast on reversibility against cells already placed:
            # z in x+y forces y in (-x)+z and x in z+(-y)
            for z in bits(chosen):
                back = cell_of(cells, sigma[x], z)
                if back is not None and not back & (1 << y):
                    dead = True
                forth = cell_of(cells, z, sigma[y])
                if forth is not None and not forth & (1 << x):
                    dead = True
            if dead:
                break
        if dead:
            continue
        add = _add_table_from_cells(n, cells)
        probe = HyperringTable(
            order=n, names=_ENUM_NAMES[:n], add=add,
            mul=tuple(tuple(0 for _ in range(n)) for _ in range(n)),
            zero=0, one=None, label="probe",
        )
        if not validate_canonical_hypergroup(probe).passed:
            continue
        mul_rows = _search_multiplication(n, add, rng)
        if mul_rows is None:
            continue
        cand = _candidate(n, add, mul_rows, "probe")
        if not validate_krasner_hyperring(cand).passed:
            continue
        if any(find_isomorphism(cand, rep) for rep in reps):
            continue
        labeled = HyperringTable(
            order=cand.order, names=cand.names, add=cand.add, mul=cand.mul,
            zero=cand.zero, one=cand.one, label=f"R{order}s{seed}_{len(reps)}",
        )
        reps.append(labeled)
        yield labeled


def _search_multiplication(n: int, add, rng: random.Random):
    """Backtracking search for one commutative Krasner multiplication."""
    pairs = _free_pairs(n)
    rows = [[0] * n for _ in range(n)]
    assigned = [[False] * n for _ in range(n)]
    for i in range(n):
        assigned[0][i] = assigned[i][0] = True

    def partial_ok() -> bool:
        for x in range(n):
            for y in range(n):
                if not assigned[x][y]:
                    continue
                for z in range(n):
                    if assigned[rows[x][y]][z] and assigned[y][z] and assigned[x][rows[y][z]]:
                        if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                            return False
                    if assigned[x][z]:
                        lhs = 0
                        full = True
                        for w in bits(add[y][z]):
                            if not assigned[x][w]:
                                full = False
                                break
                            lhs |= 1 << rows[x][w]
                        if full and lhs != add[rows[x][y]][rows[x][z]]:
                            return False
        return True

    value_orders = [rng.sample(range(n), n) for _ in pairs]

    def place(i: int) -> bool:
        if i == len(pairs):
            return True
        x, y = pairs[i]
        for v in value_orders[i]:
            rows[x][y] = rows[y][x] = v
            assigned[x][y] = assigned[y][x] = True
            if partial_ok() and place(i + 1):
                return True
            assigned[x][y] = assigned[y][x] = False
            rows[x][y] = rows[y][x] = 0
        return False

    return rows if place(0) else None


_PRODUCT_RECIPES = (
    ("Z2", "Z3"),
    ("Z2", "Z2"),
    ("Z3", "Z3"),
    ("Z2", "Z4"),
    ("Z2", "Z6"),
    ("H3", "Z2"),
    ("H3", "H3"),
)


@lru_cache(maxsize=None)
def default_corpus() -> tuple[CorpusEntry, ...]:
    """The deterministic default corpus; every entry is validated on admission."""
    base: list[CorpusEntry] = []
    by_id: dict[str, HyperringTable] = {}

    def admit(entry: CorpusEntry) -> None:
        report = validate_krasner_hyperring(entry.ring)
        if not report.passed:
            raise RuntimeError(f"corpus candidate {entry.id} is not a Krasner hyperring")
        if entry.id in by_id:
            raise RuntimeError(f"duplicate corpus id {entry.id}")
        by_id[entry.id] = entry.ring
        base.append(entry)

    for n in range(2, 13):
        admit(CorpusEntry(f"Z{n}", classical_zn(n), "builder"))
    admit(CorpusEntry("H3", h3(), "file"))
    for left, right in _PRODUCT_RECIPES:
        ring = product(by_id[left], by_id[right])
        admit(CorpusEntry(ring.label, ring, "builder", factors=(left, right)))
    for order in (2, 3):
        for ring in enumerate_hyperrings(order, "exhaustive"):
            admit(CorpusEntry(ring.label, ring, "exhaustive"))

    quotients: list[CorpusEntry] = []
    for entry in base:
        for ideal in proper_hyperideals(entry.ring):
            pres = quotient(entry.ring, ideal)
            qid = f"{entry.id}/{entry.ring.set_str(ideal)}"
            quotients.append(CorpusEntry(qid, pres.ring, entry.provenance))

    return tuple(base + quotients)


def corpus_embeddings(corpus) -> tuple[tuple[str, GoodHomomorphism], ...]:
    """Good monomorphisms derivable from the corpus.

    Identity on every entry, plus the coordinate injections into each
    componentwise product entry and, for equal factors, the diagonal.
    Candidates that are not good (the diagonal fails setwise additivity as
    soon as the factor's addition is genuinely multivalued) are dropped, so
    every returned map is a verified good monomorphism.
    """
    from .constructions import validate_good_homomorphism

    by_id = {e.id: e.ring for e in corpus}
    candidates: list[tuple[str, GoodHomomorphism]] = []
    for e in corpus:
        candidates.append(
            (f"{e.id}:id", GoodHomomorphism(e.ring, e.ring, tuple(range(e.ring.order))))
        )
    for e in corpus:
        if not e.factors:
            continue
        left, right = (by_id[f] for f in e.factors)
        n2 = right.order
        candidates.append((
            f"{e.factors[0]}->{e.id}:left",
            GoodHomomorphism(left, e.ring, tuple(x * n2 + right.zero for x in range(left.order))),
        ))
        candidates.append((
            f"{e.factors[1]}->{e.id}:right",
            GoodHomomorphism(right, e.ring, tuple(left.zero * n2 + y for y in range(right.order))),
        ))
        if e.factors[0] == e.factors[1]:
            candidates.append((
                f"{e.factors[0]}->{e.id}:diag",
                GoodHomomorphism(left, e.ring, tuple(x * n2 + x for x in range(left.order))),
            ))
    out = []
    for eid, hom in candidates:
        info = validate_good_homomorphism(hom)
        if info.passed and info.injective:
            out.append((eid, hom))
    return tuple(out)


def corpus_projections(corpus) -> tuple[tuple[str, HyperringTable, int], ...]:
    """(entry id, ring, proper ideal) triples whose quotient projections exist."""
    out = []
    for e in corpus:
        for ideal in proper_hyperideals(e.ring):
            out.append((e.id, e.ring, ideal))
    return tuple(out)
