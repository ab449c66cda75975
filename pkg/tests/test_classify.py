from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from krasner.classify import (
    NotProper,
    PHI_0,
    PHI_1,
    PHI_EMPTY,
    PHI_OMEGA,
    STANDARD_PHIS,
    apply_phi,
    classify_classical,
    classify_special,
    is_phi_class,
    is_pr_hyperideal,
    is_r_hyperideal,
    parse_phi,
    phi_power,
    phi_subset,
    ring_conditions,
)
from krasner.dsl import classical_zn
from krasner.explorer import enumerate_hyperrings, h3
from krasner.ideals import colon, proper_hyperideals, regulars
from krasner.core import bits

_POOL = [classical_zn(n) for n in (2, 3, 4, 5, 6, 8)] + [h3()] + list(enumerate_hyperrings(3))


def test_r_hyperideal_paper_examples(z6, h3_table):
    assert is_r_hyperideal(z6, z6.subset(("0", "2", "4"))).verdict
    assert is_r_hyperideal(h3_table, h3_table.subset(("0", "a"))).verdict


def test_r_hyperideal_chain_falsification(chain3):
    res = is_r_hyperideal(chain3, chain3.subset(("0", "a")))
    assert not res.verdict
    assert res.witness == {"a": 1, "b": 2}
    assert res.note == "a·1=a, ann(a)=0, 1∉N"


def test_pr_hyperideal_examples(z6, h3_table, chain3):
    assert is_pr_hyperideal(h3_table, 1 << h3_table.zero).verdict
    res = is_pr_hyperideal(chain3, chain3.subset(("0", "a")))
    assert not res.verdict and res.witness == {"a": 1, "b": 2}
    for n in proper_hyperideals(z6):
        if is_r_hyperideal(z6, n).verdict:
            assert is_pr_hyperideal(z6, n).verdict


def test_classical_flags(z6, h3_table):
    n024 = z6.subset(("0", "2", "4"))
    flags = classify_classical(z6, n024)
    assert flags.prime.verdict and flags.maximal.verdict and flags.primary.verdict

    zero = classify_classical(h3_table, 1 << h3_table.zero)
    assert not zero.prime.verdict
    assert zero.prime.witness == {"a": 2, "b": 2}
    assert zero.primary.verdict

    z6zero = classify_classical(z6, 1 << z6.zero)
    assert not z6zero.prime.verdict
    assert z6zero.prime.witness == {"a": 2, "b": 3}
    assert not z6zero.maximal.verdict


def test_special_flags(z6, h3_table):
    n024 = z6.subset(("0", "2", "4"))
    flags = classify_special(z6, n024)
    assert flags.z0.verdict and flags.pure.verdict

    b = classify_special(h3_table, h3_table.subset(("0", "a")))
    assert not b.pure.verdict and b.pure.witness == {"a": 2}

    trivial = classify_special(z6, 1 << z6.zero)
    assert trivial.pure.verdict and trivial.vn_regular.verdict


def test_predicates_reject_improper(z6):
    with pytest.raises(NotProper):
        is_r_hyperideal(z6, z6.carrier)
    with pytest.raises(NotProper):
        classify_classical(z6, z6.carrier)
    with pytest.raises(NotProper):
        apply_phi(z6, PHI_0, z6.carrier)


def test_apply_phi_values(z6, h3_table):
    n024 = z6.subset(("0", "2", "4"))
    assert apply_phi(z6, PHI_EMPTY, n024) is None
    assert apply_phi(z6, PHI_0, n024) == 1 << z6.zero
    assert apply_phi(z6, PHI_1, n024) == n024
    assert apply_phi(z6, phi_power(2), n024) == n024
    b = h3_table.subset(("0", "a"))
    assert apply_phi(h3_table, PHI_OMEGA, b) == 1 << h3_table.zero
    assert apply_phi(h3_table, phi_power(2), b) == 1 << h3_table.zero


def test_phi_subset_marker_semantics():
    assert phi_subset(None, None) and phi_subset(None, 7)
    assert not phi_subset(1, None)
    assert phi_subset(1, 3) and not phi_subset(4, 3)


def test_is_phi_class_examples(z6, h3_table):
    n024 = z6.subset(("0", "2", "4"))
    res = is_phi_class(z6, n024, phi_power(2), "r")
    assert res.verdict and res.note == "vacuous"  # N^2 = N leaves no premise

    b = h3_table.subset(("0", "a"))
    assert is_phi_class(h3_table, b, PHI_0, "r").verdict

    for table, mask in ((z6, n024), (h3_table, b)):
        for cls in ("r", "pr", "prime", "primary", "pure", "vnr", "strongly_r"):
            res = is_phi_class(table, mask, PHI_1, cls)
            assert res.verdict and res.note == "vacuous"


def test_phi_empty_specializes_to_plain_predicates(chain3):
    # also holds on the invalid chain table: the scan only reads the tables
    n = chain3.subset(("0", "a"))
    assert (
        is_phi_class(chain3, n, PHI_EMPTY, "r").verdict
        == is_r_hyperideal(chain3, n).verdict
        == False
    )


def test_ring_conditions_examples(z6, h3_table):
    cond = ring_conditions(z6)
    assert cond.reduced.verdict
    assert not cond.hyperdomain.verdict
    assert cond.sac.verdict and cond.annihilator_condition.verdict and cond.property_a.verdict

    z5 = classical_zn(5)
    assert ring_conditions(z5).hyperdomain.verdict

    h = ring_conditions(h3_table)
    assert not h.reduced.verdict
    assert h.reduced.witness == {"x": h3_table.element("a")}


_PAIRS = [
    (table, mask) for table in _POOL for mask in proper_hyperideals(table)
]


@settings(max_examples=200)
@given(st.sampled_from(_PAIRS))
def test_hierarchy_chain(pair):
    table, mask = pair
    chain_order = (PHI_EMPTY, PHI_0, PHI_OMEGA, phi_power(3), phi_power(2), PHI_1)
    verdicts = [is_phi_class(table, mask, phi, "r").verdict for phi in chain_order]
    for left, right in zip(verdicts, verdicts[1:]):
        assert (not left) or right


@settings(max_examples=200)
@given(st.sampled_from(_PAIRS), st.sampled_from(STANDARD_PHIS))
def test_phi_r_implies_phi_pr(pair, phi):
    table, mask = pair
    if is_phi_class(table, mask, phi, "r").verdict:
        assert is_phi_class(table, mask, phi, "pr").verdict


@settings(max_examples=150)
@given(st.sampled_from(_PAIRS), st.sampled_from(STANDARD_PHIS))
def test_colon_decomposition_biconditional(pair, phi):
    table, mask = pair
    regular, _ = regulars(table)
    value = apply_phi(table, phi, mask)
    decomposed = all(
        colon(table, mask, 1 << r)
        == (mask | (0 if value is None else colon(table, value, 1 << r)))
        for r in bits(regular)
        if not mask & (1 << r)
    )
    assert decomposed == is_phi_class(table, mask, phi, "r").verdict


def test_parse_phi_spellings():
    assert parse_phi("empty") == PHI_EMPTY
    assert parse_phi("0") == PHI_0
    assert parse_phi("1") == PHI_1
    assert parse_phi("omega") == parse_phi("w") == PHI_OMEGA
    assert parse_phi("2") == parse_phi("n:2") == phi_power(2)
    with pytest.raises(ValueError):
        parse_phi("n:1")
    with pytest.raises(ValueError):
        parse_phi("phi")
