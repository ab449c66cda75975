from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from krasner.core import hyper_sum
from krasner.dsl import classical_zn
from krasner.explorer import enumerate_hyperrings, h3
from krasner.ideals import (
    annihilator,
    colon,
    enumerate_hyperideals,
    generated_hyperideal,
    ideal_arith,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_hyperideal,
    minimal_primes_over,
    radical,
    regulars,
    socle,
)

# small pool with every structure flavor: classical, hyperfield, enumerated
_POOL = [classical_zn(n) for n in (2, 3, 4, 5, 6)] + [h3()] + list(enumerate_hyperrings(3))[:6]


def naive_hyperideal_masks(table):
    """Independent oracle: full subset scan with the definition re-derived.

    Uses its own membership logic (python sets, inverse found by scanning the
    addition table for zero) rather than the library's bitmask kernel.
    """
    n = table.order
    out = []
    for mask in range(1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        if table.zero not in S:
            continue
        ok = True
        for x in S:
            for r in range(n):
                if table.mul[r][x] not in S:
                    ok = False
        for x in S:
            for y in S:
                inv = [z for z in range(n) if table.add[y][z] & (1 << table.zero)]
                if len(inv) != 1:
                    ok = False
                    continue
                diff_members = [w for w in range(n) if table.add[x][inv[0]] >> w & 1]
                if any(w not in S for w in diff_members):
                    ok = False
        if ok:
            out.append(mask)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return tuple(out)


def test_is_hyperideal_examples(z6, h3_table):
    assert is_hyperideal(z6, z6.subset(("0", "2", "4"))).verdict
    assert is_hyperideal(h3_table, h3_table.subset(("0", "a"))).verdict
    res = is_hyperideal(z6, z6.subset(("0", "2")))
    assert not res.verdict and res.witness is not None
    assert "4" in res.note or "2" in res.note


def test_enumerate_examples(z6, h3_table):
    assert [z6.set_str(m) for m in enumerate_hyperideals(z6)] == [
        "{0}", "{0,3}", "{0,2,4}", "{0,1,2,3,4,5}",
    ]
    assert [h3_table.set_str(m) for m in enumerate_hyperideals(h3_table)] == [
        "{0}", "{0,a}", "{0,1,a}",
    ]
    z7 = classical_zn(7)
    assert len(enumerate_hyperideals(z7)) == 2


@pytest.mark.parametrize("table", _POOL, ids=lambda t: t.label)
def test_enumeration_matches_naive_oracle(table):
    assert enumerate_hyperideals(table) == naive_hyperideal_masks(table)


@pytest.mark.parametrize("table", _POOL, ids=lambda t: t.label)
def test_every_enumerated_subset_is_an_ideal(table):
    for mask in enumerate_hyperideals(table):
        assert is_hyperideal(table, mask).verdict


def test_lattice_generation_path_agrees(z6):
    # force the closure-based path and compare against the scan
    import krasner.ideals as ideals_mod

    scan = enumerate_hyperideals(z6)
    old = ideals_mod.FULL_SCAN_ORDER
    ideals_mod.FULL_SCAN_ORDER = 0
    try:
        enumerate_hyperideals.cache_clear()
        assert enumerate_hyperideals(z6) == scan
    finally:
        ideals_mod.FULL_SCAN_ORDER = old
        enumerate_hyperideals.cache_clear()


def test_generated_examples(z6, h3_table):
    assert generated_hyperideal(z6, z6.subset(("2",))) == z6.subset(("0", "2", "4"))
    assert generated_hyperideal(z6, 0) == z6.subset(("0",))
    assert generated_hyperideal(h3_table, h3_table.subset(("a",))) == h3_table.subset(("0", "a"))


@pytest.mark.parametrize("table", _POOL, ids=lambda t: t.label)
def test_generated_equals_intersection_of_containing(table):
    lattice = enumerate_hyperideals(table)
    for gens in range(table.carrier + 1):
        meet = table.carrier
        for m in lattice:
            if gens & ~m == 0:
                meet &= m
        assert generated_hyperideal(table, gens) == meet


def test_annihilator_examples(z6, h3_table):
    assert annihilator(z6, z6.subset(("5",))) == z6.subset(("0",))
    assert annihilator(z6, z6.subset(("2",))) == z6.subset(("0", "3"))
    assert annihilator(h3_table, h3_table.subset(("a",))) == h3_table.subset(("0", "a"))
    assert annihilator(z6, 0) == z6.carrier


def test_regulars_examples(z6, h3_table):
    reg, zd = regulars(z6)
    assert reg == z6.subset(("1", "5")) and zd == z6.subset(("0", "2", "3", "4"))
    reg, zd = regulars(h3_table)
    assert reg == h3_table.subset(("1",)) and zd == h3_table.subset(("0", "a"))
    z5 = classical_zn(5)
    reg, zd = regulars(z5)
    assert reg == z5.subset(("1", "2", "3", "4"))
    assert reg | zd == z5.carrier and reg & zd == 0


def test_radical_examples(z6, h3_table):
    assert radical(h3_table, 1 << h3_table.zero) == h3_table.subset(("0", "a"))
    assert radical(z6, z6.subset(("0", "3"))) == z6.subset(("0", "3"))
    assert radical(z6, z6.carrier) == z6.carrier


def test_colon_examples(z6):
    n024 = z6.subset(("0", "2", "4"))
    assert colon(z6, n024, z6.subset(("5",))) == n024
    assert colon(z6, z6.subset(("0", "3")), z6.subset(("2",))) == z6.subset(("0", "3"))
    assert colon(z6, n024, z6.subset(("1",))) == n024
    with pytest.raises(ValueError):
        colon(z6, n024, 0)


def test_arith_examples(z6):
    n024 = z6.subset(("0", "2", "4"))
    n03 = z6.subset(("0", "3"))
    assert ideal_sum(z6, n024, n03) == z6.carrier
    assert ideal_product(z6, n024, n024) == n024
    assert ideal_intersection(z6, n024, n024) == n024
    assert ideal_power(z6, n024, 2) == n024
    assert ideal_arith(z6, "sum", n024, n03) == z6.carrier
    with pytest.raises(ValueError):
        ideal_power(z6, n024, 0)
    with pytest.raises(ValueError):
        ideal_arith(z6, "quotient", n024, n03)


def test_minimal_primes_examples(z6, h3_table):
    zero = 1 << z6.zero
    assert [z6.set_str(p) for p in minimal_primes_over(z6, zero)] == ["{0,3}", "{0,2,4}"]
    assert [h3_table.set_str(p) for p in minimal_primes_over(h3_table, 1 << h3_table.zero)] == ["{0,a}"]
    n024 = z6.subset(("0", "2", "4"))
    assert minimal_primes_over(z6, n024) == (n024,)


def test_socle_examples(z6, h3_table):
    assert socle(z6) == z6.carrier
    assert socle(h3_table) == h3_table.subset(("0", "a"))
    z4 = classical_zn(4)
    assert socle(z4) == z4.subset(("0", "2"))


_IDEAL_POOL = [
    (table, mask)
    for table in _POOL
    for mask in enumerate_hyperideals(table)
]


@settings(max_examples=200)
@given(st.sampled_from(_IDEAL_POOL))
def test_radical_is_idempotent_and_monotone(pair):
    table, mask = pair
    rad = radical(table, mask)
    assert mask & ~rad == 0
    assert radical(table, rad) == rad
    for other in enumerate_hyperideals(table):
        if mask & ~other == 0:
            assert rad & ~radical(table, other) == 0


@settings(max_examples=200)
@given(st.sampled_from(_IDEAL_POOL), st.data())
def test_colon_is_antitone_and_unit_colon_is_identity(pair, data):
    table, mask = pair
    small = data.draw(st.integers(1, table.carrier))
    extra = data.draw(st.integers(0, table.carrier))
    big = small | extra
    assert colon(table, mask, big) & ~colon(table, mask, small) == 0
    if table.one is not None:
        assert colon(table, mask, 1 << table.one) == mask


@settings(max_examples=120)
@given(st.sampled_from(_POOL), st.data())
def test_arith_laws(table, data):
    lattice = enumerate_hyperideals(table)
    a = data.draw(st.sampled_from(lattice))
    b = data.draw(st.sampled_from(lattice))
    c = data.draw(st.sampled_from(lattice))
    assert ideal_sum(table, a, b) == ideal_sum(table, b, a)
    assert ideal_product(table, a, b) == ideal_product(table, b, a)
    assert ideal_sum(table, ideal_sum(table, a, b), c) == ideal_sum(table, a, ideal_sum(table, b, c))
    assert ideal_product(table, ideal_product(table, a, b), c) == ideal_product(
        table, a, ideal_product(table, b, c)
    )
    assert ideal_product(table, a, table.carrier) == a if table.one is not None else True
    assert ideal_intersection(table, a, a) == a
    for result in (
        ideal_sum(table, a, b),
        ideal_product(table, a, b),
        ideal_intersection(table, a, b),
    ):
        assert is_hyperideal(table, result).verdict


@settings(max_examples=100)
@given(st.sampled_from(_POOL), st.data())
def test_hypersum_of_ideals_is_their_sum(table, data):
    lattice = enumerate_hyperideals(table)
    a = data.draw(st.sampled_from(lattice))
    b = data.draw(st.sampled_from(lattice))
    assert generated_hyperideal(table, hyper_sum(table, a, b)) == ideal_sum(table, a, b)
