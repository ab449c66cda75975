import pytest

from krasner.constructions import (
    GoodHomomorphism,
    find_isomorphism,
    identity_homomorphism,
    is_isomorphic,
    quotient,
    transport_ideal,
    validate_good_homomorphism,
)
from krasner.core import bits, mask_of, validate_krasner_hyperring
from krasner.dsl import classical_zn, product
from krasner.ideals import NotAHyperideal, proper_hyperideals
from krasner.classify import is_r_hyperideal


def test_quotient_z6_by_03_is_z3(z6):
    pres = quotient(z6, z6.subset(("0", "3")))
    assert pres.ring.order == 3
    assert validate_krasner_hyperring(pres.ring).passed
    assert find_isomorphism(pres.ring, classical_zn(3)) is not None
    assert set(pres.coset_members) == {
        z6.subset(("0", "3")), z6.subset(("1", "4")), z6.subset(("2", "5")),
    }


def test_quotient_by_zero_is_isomorphic(z6, h3_table):
    for table in (z6, h3_table):
        pres = quotient(table, 1 << table.zero)
        assert is_isomorphic(pres.ring, table)


def test_quotient_h3_by_b_is_the_key_hyperfield(h3_table):
    # 1+1 is the whole carrier in H3, so its image meets both cosets: the
    # quotient is the two-element hyperfield with 1+1 = {0,1}, not classical Z2
    pres = quotient(h3_table, h3_table.subset(("0", "a")))
    assert pres.ring.order == 2
    assert validate_krasner_hyperring(pres.ring).passed
    q = pres.ring
    assert q.add[1][1] == q.carrier and q.mul[1][1] == 1
    assert find_isomorphism(pres.ring, classical_zn(2)) is None


def test_quotient_rejects_non_ideal_and_improper(z6):
    with pytest.raises(NotAHyperideal):
        quotient(z6, z6.subset(("0", "2")))
    with pytest.raises(ValueError):
        quotient(z6, z6.carrier)


def test_projection_is_good_epimorphism(z6):
    pres = quotient(z6, z6.subset(("0", "3")))
    info = validate_good_homomorphism(pres.projection)
    assert info.passed and info.surjective and not info.injective
    assert info.kernel == z6.subset(("0", "3"))


def test_identity_homomorphism(h3_table):
    info = validate_good_homomorphism(identity_homomorphism(h3_table))
    assert info.passed and info.surjective and info.injective
    assert info.kernel == 1 << h3_table.zero


def test_doubling_map_fails_multiplicativity(z6):
    double = GoodHomomorphism(z6, z6, tuple((2 * x) % 6 for x in range(6)))
    info = validate_good_homomorphism(double)
    assert not info.passed
    assert info.report.counts.get("hom-multiplicative")
    assert not info.report.counts.get("hom-additive")
    assert not info.report.counts.get("hom-zero")


def test_transport_examples(z6):
    n03 = z6.subset(("0", "3"))
    pres = quotient(z6, n03)
    zero_class = 1 << pres.ring.zero
    assert transport_ideal(pres.projection, "image", n03) == zero_class
    assert transport_ideal(pres.projection, "preimage", zero_class) == n03
    ident = identity_homomorphism(z6)
    n024 = z6.subset(("0", "2", "4"))
    assert transport_ideal(ident, "image", n024) == n024
    assert transport_ideal(ident, "preimage", n024) == n024
    with pytest.raises(ValueError):
        transport_ideal(ident, "sideways", n024)


def test_preimage_image_coherence(corpus):
    for entry in corpus[:40]:
        table = entry.ring
        for j in proper_hyperideals(table):
            pres = quotient(table, j)
            for n in proper_hyperideals(table):
                image = transport_ideal(pres.projection, "image", n)
                back = transport_ideal(pres.projection, "preimage", image)
                assert n & ~back == 0
                if j & ~n == 0:
                    assert back == n


def test_image_of_r_ideal_is_r_under_projection(z6):
    n03 = z6.subset(("0", "3"))
    n024 = z6.subset(("0", "2", "4"))
    pres = quotient(z6, n03)
    assert is_r_hyperideal(z6, n03).verdict
    image = transport_ideal(pres.projection, "image", n03)
    assert image == 1 << pres.ring.zero
    assert is_r_hyperideal(pres.ring, image).verdict
    # an ideal not containing the kernel maps onto the whole quotient
    assert transport_ideal(pres.projection, "image", n024) == pres.ring.carrier


def test_isomorphism_search(z6, z2xz3, h3_table):
    iso = find_isomorphism(z2xz3, z6)
    assert iso is not None
    # a ring isomorphism: check a few random cells by hand
    assert sorted(iso) == list(range(6))
    assert find_isomorphism(classical_zn(4), product(classical_zn(2), classical_zn(2))) is None
    assert find_isomorphism(h3_table, classical_zn(3)) is None
    assert find_isomorphism(z6, classical_zn(8)) is None


def test_isomorphism_respects_structure(z6, z2xz3):
    iso = find_isomorphism(z2xz3, z6)
    for x in range(6):
        for y in range(6):
            assert mask_of(iso[w] for w in bits(z2xz3.add[x][y])) == z6.add[iso[x]][iso[y]]
            assert iso[z2xz3.mul[x][y]] == z6.mul[iso[x]][iso[y]]
