"""Theorem registry: machine checks of the r-hyperideal claims over a corpus.

Each registered claim runs over every applicable (ring, ideal, reducer)
instance of the corpus and reports instances checked, violations with
replayable witnesses, and hypothesis-unmet skips.  Reports never assert
truth beyond the corpus; a clean run means "confirmed at desk scale".

Expectations: ``confirm`` entries must have zero violations, ``falsify``
entries must produce a witness (claims recorded as failing, kept to document
the discrepancy), and ``observe`` entries report outcomes without affecting
the exit status (statements whose source argument is known to be shaky).

Claims whose standard proofs require a multiplicative identity are gated on
the ring having one; the corpus contains zero-multiplication tables without
identities that would otherwise produce spurious witnesses (for example the
hyperdomain equivalence genuinely fails on the two-element zero ring).
Instances whose conclusion names an r-hyperideal but lands on the improper
ideal are counted as skips: properness is part of the definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .classify import (
    PHI_0,
    PHI_EMPTY,
    PHI_OMEGA,
    STANDARD_PHIS,
    apply_phi,
    classify_classical,
    classify_special,
    is_phi_class,
    is_pr_hyperideal,
    is_r_hyperideal,
    phi_class_with_value,
    phi_power,
    phi_subset,
    ring_conditions,
)
from .constructions import quotient, transport_ideal, validate_good_homomorphism
from .core import HyperringTable, bits, mask_of
from .dsl import chain
from .explorer import corpus_embeddings, corpus_projections
from .ideals import (
    annihilator,
    colon,
    enumerate_hyperideals,
    generated_hyperideal,
    ideal_product,
    ideal_sum,
    idempotents,
    is_prime_mask,
    minimal_nonzero_hyperideals,
    minimal_primes_over,
    proper_hyperideals,
    radical,
    regulars,
)


class UnknownTheoremId(KeyError):
    """A theorem id that is not in the registry."""


class UnknownPropertyId(KeyError):
    """A counterexample-search property id that is not registered."""


@dataclass(frozen=True)
class InstanceViolation:
    ring_id: str
    subject: str
    witness: str
    message: str


@dataclass
class TheoremReport:
    theorem_id: str
    statement: str
    expectation: str
    instances_checked: int = 0
    violations: list[InstanceViolation] = field(default_factory=list)
    skipped_hypothesis_unmet: int = 0

    @property
    def status(self) -> str:
        if self.expectation == "falsify":
            return "falsified as expected" if self.violations else "NOT falsified (unexpected)"
        if self.violations:
            tag = "VIOLATED" if self.expectation == "confirm" else "failed (observed)"
            return tag
        if self.instances_checked == 0:
            return "0 applicable instances"
        return "confirmed at desk scale" if self.expectation == "confirm" else "held (observed)"

    @property
    def ok(self) -> bool:
        if self.expectation == "confirm":
            return not self.violations
        if self.expectation == "falsify":
            return bool(self.violations)
        return True


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    expectation: str
    runner: object


REGISTRY: dict[str, Theorem] = {}


def _register(tid: str, statement: str, expectation: str = "confirm"):
    def deco(fn):
        REGISTRY[tid] = Theorem(tid, statement, expectation, fn)
        return fn

    return deco


def run_theorem_suite(corpus, theorem_ids=None) -> list[TheoremReport]:
    """Run registered theorems over the corpus, in registry order.

    Deterministic for a fixed corpus; unknown ids raise ``UnknownTheoremId``.
    """
    if theorem_ids is None:
        selected = list(REGISTRY)
    else:
        selected = list(theorem_ids)
        for tid in selected:
            if tid not in REGISTRY:
                raise UnknownTheoremId(tid)
        selected = [tid for tid in REGISTRY if tid in set(selected)]
    reports = []
    for tid in selected:
        thm = REGISTRY[tid]
        report = TheoremReport(tid, thm.statement, thm.expectation)
        thm.runner(list(corpus), report)
        reports.append(report)
    return reports


# ---------------------------------------------------------------------------
# shared helpers

def _viol(report, ring_id, subject, witness, message):
    report.violations.append(InstanceViolation(ring_id, subject, witness, message))


def _wit_str(table: HyperringTable, res) -> str:
    if res.witness is None:
        return ""
    parts = []
    for k, v in res.witness.items():
        if isinstance(v, tuple):
            parts.append(f"{k}={table.set_str(mask_of(v))}")
        else:
            parts.append(f"{k}={table.names[v]}")
    return ", ".join(parts)


def _mul_image(table: HyperringTable, a: int, mask: int) -> int:
    row = table.mul[a]
    return mask_of(row[x] for x in bits(mask))


def _colon_phi(table: HyperringTable, phi_value: int | None, r: int) -> int:
    # (Empty : r) is empty: no product can land in the Empty value
    if phi_value is None:
        return 0
    return colon(table, phi_value, 1 << r)


def _r_ideals(table: HyperringTable) -> list[int]:
    return [n for n in proper_hyperideals(table) if is_r_hyperideal(table, n).verdict]


def _phi_r(table: HyperringTable, ideal: int, phi) -> bool:
    return is_phi_class(table, ideal, phi, "r").verdict


# ---------------------------------------------------------------------------
# r-hyperideal structure theorems

@_register(
    "THM-3.1",
    "for a proper hyperideal N the following agree: N is r; (a*R) ∩ N = a*N for "
    "every regular a; (N:a) = N for every regular a outside N",
)
def _thm_31(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        for N in proper_hyperideals(R):
            report.instances_checked += 1
            a_flag = is_r_hyperideal(R, N).verdict
            b_flag = all(
                (_mul_image(R, a, R.carrier) & N) == _mul_image(R, a, N)
                for a in bits(regular)
            )
            c_flag = all(
                colon(R, N, 1 << a) == N for a in bits(regular) if not N & (1 << a)
            )
            if not (a_flag == b_flag == c_flag):
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"r={a_flag}, image-condition={b_flag}, colon-condition={c_flag}",
                    "the three characterizations disagree",
                )


@_register("COR-1a", "the zero hyperideal is an r-hyperideal")
def _cor_1a(corpus, report):
    for e in corpus:
        report.instances_checked += 1
        res = is_r_hyperideal(e.ring, 1 << e.ring.zero)
        if not res.verdict:
            _viol(report, e.id, "N={0}", _wit_str(e.ring, res), res.note)


@_register("COR-1b", "the intersection of two r-hyperideals is an r-hyperideal")
def _cor_1b(corpus, report):
    for e in corpus:
        R = e.ring
        rids = _r_ideals(R)
        for i, a in enumerate(rids):
            for b in rids[i:]:
                report.instances_checked += 1
                res = is_r_hyperideal(R, a & b)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        f"{R.set_str(a)} ∩ {R.set_str(b)}",
                        _wit_str(R, res), "intersection is not r",
                    )


@_register("COR-1c", "every r-hyperideal consists of zero divisors")
def _cor_1c(corpus, report):
    for e in corpus:
        R = e.ring
        _, zd = regulars(R)
        for N in _r_ideals(R):
            report.instances_checked += 1
            if N & ~zd:
                wit = next(i for i in bits(N & ~zd))
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"regular member {R.names[wit]}", "r-hyperideal meets r(R)",
                )


@_register("COR-1d", "every r-hyperideal is a pr-hyperideal")
def _cor_1d(corpus, report):
    for e in corpus:
        R = e.ring
        for N in _r_ideals(R):
            report.instances_checked += 1
            res = is_pr_hyperideal(R, N)
            if not res.verdict:
                _viol(report, e.id, f"N={R.set_str(N)}", _wit_str(R, res), res.note)


@_register(
    "COR-1e",
    "a prime hyperideal is r exactly when it consists of zero divisors; "
    "minimal primes are r",
)
def _cor_1e(corpus, report):
    for e in corpus:
        R = e.ring
        _, zd = regulars(R)
        for N in proper_hyperideals(R):
            if not is_prime_mask(R, N):
                continue
            report.instances_checked += 1
            inside = N & ~zd == 0
            r_flag = is_r_hyperideal(R, N).verdict
            if r_flag != inside:
                _viol(
                    report, e.id, f"prime {R.set_str(N)}",
                    f"r={r_flag}, inside-zd={inside}", "biconditional fails",
                )
        for P in minimal_primes_over(R, 1 << R.zero):
            report.instances_checked += 1
            if not is_r_hyperideal(R, P).verdict:
                _viol(report, e.id, f"minimal prime {R.set_str(P)}", "", "not r")


@_register(
    "COR-1f",
    "(N:S) is r for r-hyperideal N and S outside N; annihilators of elements "
    "and of subsets are r whenever proper",
)
def _cor_1f(corpus, report):
    for e in corpus:
        R = e.ring
        for N in _r_ideals(R):
            for s in range(R.order):
                if N & (1 << s):
                    continue
                report.instances_checked += 1
                C = colon(R, N, 1 << s)
                if C == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                res = is_r_hyperideal(R, C)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        f"(N:{R.names[s]}), N={R.set_str(N)}",
                        _wit_str(R, res), "colon is not r",
                    )
        for x in range(R.order):
            if x == R.zero:
                continue
            report.instances_checked += 1
            A = annihilator(R, 1 << x)
            if A == R.carrier:
                report.skipped_hypothesis_unmet += 1
                continue
            res = is_r_hyperideal(R, A)
            if not res.verdict:
                _viol(report, e.id, f"ann({R.names[x]})", _wit_str(R, res), "not r")
        for S in enumerate_hyperideals(R):
            if S == 1 << R.zero:
                continue
            report.instances_checked += 1
            A = annihilator(R, S)
            if A == R.carrier:
                report.skipped_hypothesis_unmet += 1
                continue
            res = is_r_hyperideal(R, A)
            if not res.verdict:
                _viol(report, e.id, f"ann({R.set_str(S)})", _wit_str(R, res), "not r")


@_register("COR-1g", "minimal hyperideals of a reduced hyperring are r")
def _cor_1g(corpus, report):
    for e in corpus:
        R = e.ring
        if not ring_conditions(R).reduced.verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        for m in minimal_nonzero_hyperideals(R):
            report.instances_checked += 1
            if m == R.carrier:
                report.skipped_hypothesis_unmet += 1
                continue
            if not is_r_hyperideal(R, m).verdict:
                _viol(report, e.id, f"minimal {R.set_str(m)}", "", "not r")


@_register("COR-1h", "pure and von Neumann regular hyperideals are r")
def _cor_1h(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            special = classify_special(R, N)
            for flagname, flag in (("pure", special.pure), ("vnr", special.vn_regular)):
                if not flag.verdict:
                    continue
                report.instances_checked += 1
                res = is_r_hyperideal(R, N)
                if not res.verdict:
                    _viol(
                        report, e.id, f"{flagname} {R.set_str(N)}",
                        _wit_str(R, res), f"{flagname} ideal is not r",
                    )


@_register(
    "COR-1i",
    "under the strong annihilator condition: N is r iff J*K ⊆ N with ann(J)=0 "
    "forces K ⊆ N over all hyperideal pairs",
)
def _cor_1i(corpus, report):
    for e in corpus:
        R = e.ring
        if not ring_conditions(R).sac.verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        zero_bit = 1 << R.zero
        lattice = enumerate_hyperideals(R)
        for N in proper_hyperideals(R):
            report.instances_checked += 1
            bracket = True
            for J in lattice:
                if annihilator(R, J) != zero_bit:
                    continue
                for K in lattice:
                    if ideal_product(R, J, K) & ~N == 0 and K & ~N:
                        bracket = False
                        break
                if not bracket:
                    break
            r_flag = is_r_hyperideal(R, N).verdict
            if bracket != r_flag:
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"r={r_flag}, pair-condition={bracket}", "biconditional fails",
                )


@_register(
    "COR-1j",
    "the sum of two r-hyperideals may fail to be an r-hyperideal",
    expectation="falsify",
)
def _cor_1j(corpus, report):
    for e in corpus:
        R = e.ring
        rids = _r_ideals(R)
        for i, a in enumerate(rids):
            for b in rids[i:]:
                report.instances_checked += 1
                s = ideal_sum(R, a, b)
                if s == R.carrier:
                    _viol(
                        report, e.id,
                        f"{R.set_str(a)}+{R.set_str(b)}",
                        f"sum={R.set_str(s)}",
                        "the sum is the whole carrier, hence not proper and not r",
                    )
                    return
                if not is_r_hyperideal(R, s).verdict:
                    _viol(
                        report, e.id,
                        f"{R.set_str(a)}+{R.set_str(b)}",
                        f"sum={R.set_str(s)}", "the sum is not r",
                    )
                    return


@_register(
    "LEM-2a",
    "N is r iff every hyperideal pair with J meeting the regular elements and "
    "J*K ⊆ N has K ⊆ N",
)
def _lem_2a(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        lattice = enumerate_hyperideals(R)
        for N in proper_hyperideals(R):
            report.instances_checked += 1
            bracket = True
            for J in lattice:
                if not J & regular:
                    continue
                for K in lattice:
                    if ideal_product(R, J, K) & ~N == 0 and K & ~N:
                        bracket = False
                        break
                if not bracket:
                    break
            if bracket != is_r_hyperideal(R, N).verdict:
                _viol(report, e.id, f"N={R.set_str(N)}", f"pair-condition={bracket}", "biconditional fails")


@_register(
    "LEM-2b",
    "a non-r hyperideal inside the zero divisors admits hyperideals J=(N:x), "
    "K=(N:J) with J meeting r(R), N strictly below both, and J*K ⊆ N",
)
def _lem_2b(corpus, report):
    for e in corpus:
        R = e.ring
        regular, zd = regulars(R)
        for N in proper_hyperideals(R):
            if N & ~zd or is_r_hyperideal(R, N).verdict:
                continue
            report.instances_checked += 1
            pair = next(
                (
                    (r, x)
                    for r in bits(regular)
                    for x in range(R.order)
                    if N & (1 << R.mul[r][x]) and not N & (1 << x)
                ),
                None,
            )
            if pair is None:
                _viol(report, e.id, f"N={R.set_str(N)}", "", "no witness pair despite non-r verdict")
                continue
            r, x = pair
            J = colon(R, N, 1 << x)
            K = colon(R, N, J)
            problems = []
            if not J & regular:
                problems.append("J misses r(R)")
            if not (N & ~J == 0 and N != J):
                problems.append("N is not strictly below J")
            if not (N & ~K == 0 and N != K):
                problems.append("N is not strictly below K")
            if ideal_product(R, J, K) & ~N:
                problems.append("J*K escapes N")
            if problems:
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"J={R.set_str(J)}, K={R.set_str(K)}", "; ".join(problems),
                )


@_register(
    "PROP-1a",
    "r-hyperideals J, K with N*J = N*K or N ∩ J = N ∩ K for some hyperideal N "
    "meeting r(R) are equal",
)
def _prop_1a(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        rids = _r_ideals(R)
        for N in enumerate_hyperideals(R):
            if not N & regular:
                continue
            for J in rids:
                for K in rids:
                    same_prod = ideal_product(R, N, J) == ideal_product(R, N, K)
                    same_meet = (N & J) == (N & K)
                    if not (same_prod or same_meet):
                        continue
                    report.instances_checked += 1
                    if J != K:
                        _viol(
                            report, e.id,
                            f"N={R.set_str(N)}",
                            f"J={R.set_str(J)}, K={R.set_str(K)}",
                            "cancellation fails",
                        )


@_register(
    "PROP-1b",
    "if N*M is r and M meets r(R), then N = N*M and N is r",
)
def _prop_1b(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        lattice = enumerate_hyperideals(R)
        for M in lattice:
            if not M & regular:
                continue
            for N in lattice:
                prod = ideal_product(R, N, M)
                if prod == R.carrier or not is_r_hyperideal(R, prod).verdict:
                    continue
                report.instances_checked += 1
                problems = []
                if prod != N:
                    problems.append("N != N*M")
                if N != R.carrier and not is_r_hyperideal(R, N).verdict:
                    problems.append("N is not r")
                if problems:
                    _viol(
                        report, e.id, f"N={R.set_str(N)}, M={R.set_str(M)}",
                        f"N*M={R.set_str(prod)}", "; ".join(problems),
                    )


@_register(
    "THM-2",
    "if the intersection of pairwise incomparable primes is r, each of them is r",
)
def _thm_2(corpus, report):
    for e in corpus:
        R = e.ring
        primes = [p for p in proper_hyperideals(R) if is_prime_mask(R, p)]
        for k in range(2, min(len(primes), 4) + 1):
            for combo in combinations(primes, k):
                if any(
                    a & ~b == 0 or b & ~a == 0
                    for a, b in combinations(combo, 2)
                ):
                    continue
                meet = R.carrier
                for p in combo:
                    meet &= p
                if not is_r_hyperideal(R, meet).verdict:
                    continue
                report.instances_checked += 1
                for p in combo:
                    if not is_r_hyperideal(R, p).verdict:
                        _viol(
                            report, e.id,
                            " ∩ ".join(R.set_str(p) for p in combo),
                            f"prime {R.set_str(p)}", "member prime is not r",
                        )


@_register(
    "THM-IMG",
    "a good epimorphism with kernel inside an r-hyperideal N sends N to an "
    "r-hyperideal of the target",
)
def _thm_img(corpus, report):
    for ring_id, R, J in corpus_projections(corpus):
        pres = quotient(R, J)
        for N in _r_ideals(R):
            if J & ~N:
                continue
            report.instances_checked += 1
            image = transport_ideal(pres.projection, "image", N)
            if image == pres.ring.carrier:
                _viol(
                    report, ring_id, f"N={R.set_str(N)} via /{R.set_str(J)}",
                    "", "image is improper",
                )
                continue
            res = is_r_hyperideal(pres.ring, image)
            if not res.verdict:
                _viol(
                    report, ring_id, f"N={R.set_str(N)} via /{R.set_str(J)}",
                    _wit_str(pres.ring, res), "image is not r",
                )


@_register(
    "THM-PRE",
    "preimages of r-hyperideals under good monomorphisms are r (skipping the "
    "non-unital embeddings whose preimage is the whole source)",
)
def _thm_pre(corpus, report):
    for emb_id, hom in corpus_embeddings(corpus):
        info = validate_good_homomorphism(hom)
        if not (info.passed and info.injective):
            report.skipped_hypothesis_unmet += 1
            continue
        for M in _r_ideals(hom.target):
            report.instances_checked += 1
            pre = transport_ideal(hom, "preimage", M)
            if pre == hom.source.carrier:
                report.skipped_hypothesis_unmet += 1
                continue
            res = is_r_hyperideal(hom.source, pre)
            if not res.verdict:
                _viol(
                    report, emb_id, f"M={hom.target.set_str(M)}",
                    _wit_str(hom.source, res), "preimage is not r",
                )


@_register(
    "THM-HD",
    "for unital tables: R is a hyperdomain iff its only r-hyperideal is zero "
    "iff ann(x*y) = ann(x) ∪ ann(y) for all x, y",
)
def _thm_hd(corpus, report):
    for e in corpus:
        R = e.ring
        if R.one is None:
            report.skipped_hypothesis_unmet += 1
            continue
        report.instances_checked += 1
        hd = ring_conditions(R).hyperdomain.verdict
        only_zero = _r_ideals(R) == [1 << R.zero]
        ann_law = all(
            annihilator(R, 1 << R.mul[x][y])
            == (annihilator(R, 1 << x) | annihilator(R, 1 << y))
            for x in range(R.order)
            for y in range(R.order)
        )
        if not (hd == only_zero == ann_law):
            _viol(
                report, e.id, "ring",
                f"hyperdomain={hd}, only-zero-r={only_zero}, ann-law={ann_law}",
                "three-way equivalence fails",
            )


@_register(
    "PROP-2",
    "a proper sum of principal hyperideals of idempotents is an r-hyperideal",
)
def _prop_2(corpus, report):
    for e in corpus:
        R = e.ring
        idem = idempotents(R)
        if len(idem) > 12:
            report.skipped_hypothesis_unmet += 1
            continue
        for k in range(1, len(idem) + 1):
            for combo in combinations(idem, k):
                total = 1 << R.zero
                for elem in combo:
                    total = ideal_sum(R, total, generated_hyperideal(R, 1 << elem))
                if total == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                res = is_r_hyperideal(R, total)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        "e=" + ",".join(R.names[i] for i in combo),
                        _wit_str(R, res), "idempotent-generated sum is not r",
                    )


@_register(
    "PROP-3a",
    "if the identity lies in x+y, then ann(x)+ann(y) is r whenever proper",
)
def _prop_3a(corpus, report):
    for e in corpus:
        R = e.ring
        if R.one is None:
            report.skipped_hypothesis_unmet += 1
            continue
        one_bit = 1 << R.one
        for x in range(R.order):
            for y in range(R.order):
                if not R.add[x][y] & one_bit:
                    continue
                N = ideal_sum(R, annihilator(R, 1 << x), annihilator(R, 1 << y))
                if N == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                res = is_r_hyperideal(R, N)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        f"x={R.names[x]}, y={R.names[y]}",
                        _wit_str(R, res), "ann(x)+ann(y) is not r",
                    )


@_register(
    "PROP-3b",
    "in a reduced hyperring, a minimal prime plus the annihilator of an "
    "idempotent is r (source argument unclear; reported, not asserted)",
    expectation="observe",
)
def _prop_3b(corpus, report):
    for e in corpus:
        R = e.ring
        if not ring_conditions(R).reduced.verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        for I in minimal_primes_over(R, 1 << R.zero):
            for elem in idempotents(R):
                N = ideal_sum(R, I, annihilator(R, 1 << elem))
                if N == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                res = is_r_hyperideal(R, N)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        f"I={R.set_str(I)}, e={R.names[elem]}",
                        _wit_str(R, res), "I+ann(e) is not r",
                    )


@_register(
    "COR-2a",
    "ann(N)+ann(M) is r whenever it equals ann(K) for some hyperideal K and is proper",
)
def _cor_2a(corpus, report):
    for e in corpus:
        R = e.ring
        lattice = enumerate_hyperideals(R)
        ann_of = {K: annihilator(R, K) for K in lattice}
        realized = set(ann_of.values())
        for N in lattice:
            for M in lattice:
                S = ideal_sum(R, ann_of[N], ann_of[M])
                if S not in realized:
                    continue
                if S == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                res = is_r_hyperideal(R, S)
                if not res.verdict:
                    _viol(
                        report, e.id,
                        f"ann({R.set_str(N)})+ann({R.set_str(M)})",
                        _wit_str(R, res), "not r",
                    )


@_register(
    "COR-2b",
    "a proper direct sum of r-hyperideals (meeting only in zero) is r, and "
    "both summands of an r direct sum are r",
)
def _cor_2b(corpus, report):
    for e in corpus:
        R = e.ring
        zero_bit = 1 << R.zero
        rids = _r_ideals(R)
        for i, a in enumerate(rids):
            for b in rids[i + 1 :]:
                if a & b != zero_bit:
                    continue
                s = ideal_sum(R, a, b)
                if s == R.carrier:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                if not is_r_hyperideal(R, s).verdict:
                    _viol(
                        report, e.id,
                        f"{R.set_str(a)} ⊕ {R.set_str(b)}", "", "direct sum is not r",
                    )
        for N in rids:
            for M in enumerate_hyperideals(R):
                for K in enumerate_hyperideals(R):
                    if M & K == zero_bit and ideal_sum(R, M, K) == N and M != zero_bit and K != zero_bit:
                        report.instances_checked += 1
                        bad = [
                            X for X in (M, K)
                            if X != R.carrier and not is_r_hyperideal(R, X).verdict
                        ]
                        if bad:
                            _viol(
                                report, e.id,
                                f"{R.set_str(N)} = {R.set_str(M)} ⊕ {R.set_str(K)}",
                                R.set_str(bad[0]), "summand is not r",
                            )


@_register(
    "COR-2c",
    "the socle of a reduced hyperring is r whenever it is proper",
)
def _cor_2c(corpus, report):
    from .ideals import socle

    for e in corpus:
        R = e.ring
        if not ring_conditions(R).reduced.verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        s = socle(R)
        if s == R.carrier:
            report.skipped_hypothesis_unmet += 1
            continue
        report.instances_checked += 1
        res = is_r_hyperideal(R, s)
        if not res.verdict:
            _viol(report, e.id, f"soc={R.set_str(s)}", _wit_str(R, res), "socle is not r")


@_register("PROP-4", "N is pr exactly when sqrt(N) is r (radical proper)")
def _prop_4(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            rad = radical(R, N)
            if rad == R.carrier:
                report.skipped_hypothesis_unmet += 1
                continue
            report.instances_checked += 1
            pr_flag = is_pr_hyperideal(R, N).verdict
            r_flag = is_r_hyperideal(R, rad).verdict
            if pr_flag != r_flag:
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"pr={pr_flag}, sqrt-r={r_flag}", "biconditional fails",
                )


@_register("PROP-5", "the nilradical is an r-hyperideal whenever proper")
def _prop_5(corpus, report):
    for e in corpus:
        R = e.ring
        nil = radical(R, 1 << R.zero)
        if nil == R.carrier:
            report.skipped_hypothesis_unmet += 1
            continue
        report.instances_checked += 1
        res = is_r_hyperideal(R, nil)
        if not res.verdict:
            _viol(report, e.id, f"nil={R.set_str(nil)}", _wit_str(R, res), "nilradical is not r")


@_register(
    "COR-4",
    "N is pr iff (r*R) ∩ sqrt(N) = r*sqrt(N) for every regular r iff "
    "sqrt(N) = sqrt((N:r)) for every regular r outside N",
)
def _cor_4(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        for N in proper_hyperideals(R):
            report.instances_checked += 1
            rad = radical(R, N)
            a_flag = is_pr_hyperideal(R, N).verdict
            b_flag = all(
                (_mul_image(R, r, R.carrier) & rad) == _mul_image(R, r, rad)
                for r in bits(regular)
            )
            c_flag = all(
                radical(R, colon(R, N, 1 << r)) == rad
                for r in bits(regular)
                if not N & (1 << r)
            )
            if not (a_flag == b_flag == c_flag):
                _viol(
                    report, e.id, f"N={R.set_str(N)}",
                    f"pr={a_flag}, image={b_flag}, colon-radical={c_flag}",
                    "equivalence fails",
                )


@_register("THM-9", "every z0-hyperideal is an r-hyperideal")
def _thm_9(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            if not classify_special(R, N).z0.verdict:
                continue
            report.instances_checked += 1
            res = is_r_hyperideal(R, N)
            if not res.verdict:
                _viol(report, e.id, f"z0 {R.set_str(N)}", _wit_str(R, res), "z0 ideal is not r")


@_register(
    "THM-10",
    "for unital tables, every hyperideal inside the zero divisors lies in a "
    "prime r-hyperideal",
)
def _thm_10(corpus, report):
    for e in corpus:
        R = e.ring
        if R.one is None:
            report.skipped_hypothesis_unmet += 1
            continue
        _, zd = regulars(R)
        primes = [p for p in proper_hyperideals(R) if is_prime_mask(R, p)]
        for N in proper_hyperideals(R):
            if N & ~zd:
                report.skipped_hypothesis_unmet += 1
                continue
            report.instances_checked += 1
            if not any(N & ~p == 0 and is_r_hyperideal(R, p).verdict for p in primes):
                _viol(report, e.id, f"N={R.set_str(N)}", "", "no prime r-hyperideal above N")


@_register("THM-11", "minimal primes over an r-hyperideal are r")
def _thm_11(corpus, report):
    for e in corpus:
        R = e.ring
        for N in _r_ideals(R):
            for P in minimal_primes_over(R, N):
                report.instances_checked += 1
                if not is_r_hyperideal(R, P).verdict:
                    _viol(
                        report, e.id,
                        f"P={R.set_str(P)} over N={R.set_str(N)}", "", "not r",
                    )


@_register(
    "PROP-6",
    "if N is r, N ⊆ M, and M/N is r in R/N, then M is r in R",
)
def _prop_6(corpus, report):
    for ring_id, R, J in corpus_projections(corpus):
        if not is_r_hyperideal(R, J).verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        pres = quotient(R, J)
        for M in proper_hyperideals(R):
            if J & ~M:
                continue
            report.instances_checked += 1
            image = transport_ideal(pres.projection, "image", M)
            if image == pres.ring.carrier or not is_r_hyperideal(pres.ring, image).verdict:
                continue
            res = is_r_hyperideal(R, M)
            if not res.verdict:
                _viol(
                    report, ring_id,
                    f"M={R.set_str(M)} over N={R.set_str(J)}",
                    _wit_str(R, res), "M/N is r but M is not",
                )


@_register(
    "PROP-7",
    "for unital tables, maximal r-hyperideals (maximal under inclusion among "
    "r-hyperideals) are prime",
)
def _prop_7(corpus, report):
    for e in corpus:
        R = e.ring
        if R.one is None:
            report.skipped_hypothesis_unmet += 1
            continue
        rids = _r_ideals(R)
        maximal = [
            n for n in rids if not any(m != n and n & ~m == 0 for m in rids)
        ]
        for n in maximal:
            report.instances_checked += 1
            res = classify_classical(R, n).prime
            if not res.verdict:
                _viol(report, e.id, f"max r {R.set_str(n)}", _wit_str(R, res), "not prime")


@_register(
    "PROP-8",
    "if every prime hyperideal is r, every maximal hyperideal is r",
)
def _prop_8(corpus, report):
    for e in corpus:
        R = e.ring
        primes = [p for p in proper_hyperideals(R) if is_prime_mask(R, p)]
        if not all(is_r_hyperideal(R, p).verdict for p in primes):
            report.skipped_hypothesis_unmet += 1
            continue
        proper = proper_hyperideals(R)
        maximal = [
            n for n in proper if not any(m != n and n & ~m == 0 for m in proper)
        ]
        for n in maximal:
            report.instances_checked += 1
            res = is_r_hyperideal(R, n)
            if not res.verdict:
                _viol(report, e.id, f"maximal {R.set_str(n)}", _wit_str(R, res), "not r")


@_register(
    "PROP-9",
    "in a reduced hyperring with Property A, maximal r-hyperideals are z0",
)
def _prop_9(corpus, report):
    for e in corpus:
        R = e.ring
        cond = ring_conditions(R)
        if not (cond.reduced.verdict and cond.property_a.verdict):
            report.skipped_hypothesis_unmet += 1
            continue
        rids = _r_ideals(R)
        maximal = [
            n for n in rids if not any(m != n and n & ~m == 0 for m in rids)
        ]
        for n in maximal:
            report.instances_checked += 1
            res = classify_special(R, n).z0
            if not res.verdict:
                _viol(report, e.id, f"max r {R.set_str(n)}", _wit_str(R, res), "not z0")


# ---------------------------------------------------------------------------
# phi-family

_HIERARCHY = (PHI_EMPTY, PHI_0, PHI_OMEGA, phi_power(3), phi_power(2))


@_register(
    "PHI-SPEC",
    "the Empty reducer specializes the phi-classes to the plain r/pr predicates",
)
def _phi_spec(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            report.instances_checked += 1
            same_r = is_phi_class(R, N, PHI_EMPTY, "r").verdict == is_r_hyperideal(R, N).verdict
            same_pr = is_phi_class(R, N, PHI_EMPTY, "pr").verdict == is_pr_hyperideal(R, N).verdict
            if not (same_r and same_pr):
                _viol(report, e.id, f"N={R.set_str(N)}", "", "specialization disagrees")


@_register(
    "THM-4.1-i",
    "pointwise larger reducers weaken the class: phi(N) ⊆ psi(N) makes every "
    "phi-r ideal psi-r",
)
def _thm_41_i(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            values = {phi: apply_phi(R, phi, N) for phi in STANDARD_PHIS}
            for phi in STANDARD_PHIS:
                for psi in STANDARD_PHIS:
                    if phi is psi or not phi_subset(values[phi], values[psi]):
                        continue
                    report.instances_checked += 1
                    if _phi_r(R, N, phi) and not _phi_r(R, N, psi):
                        _viol(
                            report, e.id, f"N={R.set_str(N)}",
                            f"{phi} ⊆ {psi}", "monotonicity fails",
                        )


@_register("THM-4.1-ii", "every phi-r-hyperideal is a phi-pr-hyperideal")
def _thm_41_ii(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not _phi_r(R, N, phi):
                    continue
                report.instances_checked += 1
                if not is_phi_class(R, N, phi, "pr").verdict:
                    _viol(report, e.id, f"N={R.set_str(N)}", str(phi), "phi-r but not phi-pr")


@_register(
    "THM-4.1-iii",
    "the hierarchy chain: r implies weakly r implies omega-r implies "
    "(n+1)-almost implies n-almost r",
)
def _thm_41_iii(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for left, right in zip(_HIERARCHY, _HIERARCHY[1:]):
                report.instances_checked += 1
                if _phi_r(R, N, left) and not _phi_r(R, N, right):
                    _viol(
                        report, e.id, f"N={R.set_str(N)}",
                        f"{left} -> {right}", "hierarchy step fails",
                    )


@_register("THM-4.1-iv", "every phi-pure hyperideal is phi-r")
def _thm_41_iv(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not is_phi_class(R, N, phi, "pure").verdict:
                    continue
                report.instances_checked += 1
                if not _phi_r(R, N, phi):
                    _viol(report, e.id, f"N={R.set_str(N)}", str(phi), "phi-pure but not phi-r")


@_register("THM-4.1-v", "every phi-von-Neumann-regular hyperideal is phi-r")
def _thm_41_v(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not is_phi_class(R, N, phi, "vnr").verdict:
                    continue
                report.instances_checked += 1
                if not _phi_r(R, N, phi):
                    _viol(report, e.id, f"N={R.set_str(N)}", str(phi), "phi-vnr but not phi-r")


@_register(
    "THM-4.2",
    "N is phi-r iff (N:r) = N ∪ (phi(N):r) for every regular r outside N",
)
def _thm_42(corpus, report):
    for e in corpus:
        R = e.ring
        regular, _ = regulars(R)
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                report.instances_checked += 1
                value = apply_phi(R, phi, N)
                decomposed = all(
                    colon(R, N, 1 << r) == (N | _colon_phi(R, value, r))
                    for r in bits(regular)
                    if not N & (1 << r)
                )
                r_flag = _phi_r(R, N, phi)
                if decomposed != r_flag:
                    _viol(
                        report, e.id, f"N={R.set_str(N)}, {phi}",
                        f"phi-r={r_flag}, colon-decomposition={decomposed}",
                        "biconditional fails",
                    )


@_register("THM-STRONG", "every strongly phi-r-hyperideal is phi-r")
def _thm_strong(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not is_phi_class(R, N, phi, "strongly_r").verdict:
                    continue
                report.instances_checked += 1
                if not _phi_r(R, N, phi):
                    _viol(report, e.id, f"N={R.set_str(N)}", str(phi), "strongly phi-r but not phi-r")


@_register(
    "THM-SAC-PHI",
    "under the strong annihilator condition, if phi(N) is r then N is phi-r "
    "iff J*K ⊆ N escaping phi(N) with ann(J)=0 forces K ⊆ N",
)
def _thm_sac_phi(corpus, report):
    for e in corpus:
        R = e.ring
        if not ring_conditions(R).sac.verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                value = apply_phi(R, phi, N)
                if value is None or value == R.carrier or not is_r_hyperideal(R, value).verdict:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                bracket = is_phi_class(R, N, phi, "strongly_r").verdict
                r_flag = _phi_r(R, N, phi)
                if bracket != r_flag:
                    _viol(
                        report, e.id, f"N={R.set_str(N)}, {phi}",
                        f"phi-r={r_flag}, pair-condition={bracket}", "biconditional fails",
                    )


@_register(
    "THM-PHI-ZD1",
    "if phi(N) is r and N is phi-r, then N consists of zero divisors",
)
def _thm_phi_zd1(corpus, report):
    for e in corpus:
        R = e.ring
        _, zd = regulars(R)
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                value = apply_phi(R, phi, N)
                if value is None or value == R.carrier or not is_r_hyperideal(R, value).verdict:
                    report.skipped_hypothesis_unmet += 1
                    continue
                if not _phi_r(R, N, phi):
                    continue
                report.instances_checked += 1
                if N & ~zd:
                    _viol(report, e.id, f"N={R.set_str(N)}, {phi}", "", "N meets r(R)")


@_register(
    "THM-PHI-ZD2",
    "if phi(N) is r and N is prime, then N is phi-r iff N consists of zero divisors",
)
def _thm_phi_zd2(corpus, report):
    for e in corpus:
        R = e.ring
        _, zd = regulars(R)
        for N in proper_hyperideals(R):
            if not is_prime_mask(R, N):
                continue
            for phi in STANDARD_PHIS:
                value = apply_phi(R, phi, N)
                if value is None or value == R.carrier or not is_r_hyperideal(R, value).verdict:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                r_flag = _phi_r(R, N, phi)
                inside = N & ~zd == 0
                if r_flag != inside:
                    _viol(
                        report, e.id, f"N={R.set_str(N)}, {phi}",
                        f"phi-r={r_flag}, inside-zd={inside}", "biconditional fails",
                    )


@_register("THM-PHI-ZD3", "if N is phi-r then N - phi(N) consists of zero divisors")
def _thm_phi_zd3(corpus, report):
    for e in corpus:
        R = e.ring
        _, zd = regulars(R)
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not _phi_r(R, N, phi):
                    continue
                report.instances_checked += 1
                value = apply_phi(R, phi, N)
                prem = N if value is None else N & ~value
                if prem & ~zd:
                    _viol(report, e.id, f"N={R.set_str(N)}, {phi}", "", "N - phi(N) meets r(R)")


@_register("THM-PHI-IFF", "if phi(N) is r, then N is phi-r iff N is r")
def _thm_phi_iff(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                value = apply_phi(R, phi, N)
                if value is None or value == R.carrier or not is_r_hyperideal(R, value).verdict:
                    report.skipped_hypothesis_unmet += 1
                    continue
                report.instances_checked += 1
                if _phi_r(R, N, phi) != is_r_hyperideal(R, N).verdict:
                    _viol(report, e.id, f"N={R.set_str(N)}, {phi}", "", "biconditional fails")


def _phi_value_on_quotient(R, pres, M, phi):
    """phi_N on the quotient: the class of phi(M)+N, Empty staying Empty."""
    value = apply_phi(R, phi, M)
    if value is None:
        return None
    lifted = ideal_sum(R, value, mask_of(bits(pres.projection.kernel)))
    return transport_ideal(pres.projection, "image", lifted)


@_register(
    "THM-QUOT-PHI-LIT",
    "literal reading: a hyperideal N contained in r(R) transports phi-r "
    "ideals M above it to phi_N-r ideals of R/N (zero is never regular, so "
    "no finite instance applies)",
)
def _thm_quot_phi_lit(corpus, report):
    for ring_id, R, J in corpus_projections(corpus):
        regular, _ = regulars(R)
        if J & ~regular:
            report.skipped_hypothesis_unmet += 1
            continue
        report.instances_checked += 1  # unreachable at finite scale


@_register(
    "THM-QUOT-PHI",
    "nonzero-part reading: if N∖{0} consists of regular elements and M ⊇ N is "
    "phi-r, then M/N is phi_N-r in R/N with phi_N(M/N) = (phi(M)+N)/N",
)
def _thm_quot_phi(corpus, report):
    for ring_id, R, J in corpus_projections(corpus):
        regular, _ = regulars(R)
        if (J & ~(1 << R.zero)) & ~regular:
            report.skipped_hypothesis_unmet += 1
            continue
        pres = quotient(R, J)
        for M in proper_hyperideals(R):
            if J & ~M:
                continue
            for phi in STANDARD_PHIS:
                if not _phi_r(R, M, phi):
                    continue
                report.instances_checked += 1
                image = transport_ideal(pres.projection, "image", M)
                if image == pres.ring.carrier:
                    _viol(report, ring_id, f"M={R.set_str(M)}", str(phi), "image improper")
                    continue
                qvalue = _phi_value_on_quotient(R, pres, M, phi)
                res = phi_class_with_value(pres.ring, image, qvalue, "r")
                if not res.verdict:
                    _viol(
                        report, ring_id,
                        f"M={R.set_str(M)} over N={R.set_str(J)}",
                        f"{phi}: " + _wit_str(pres.ring, res), "quotient is not phi_N-r",
                    )


@_register(
    "THM-QUOT-R",
    "if N is r and M/N is r in R/N, then M is phi-r for every reducer",
)
def _thm_quot_r(corpus, report):
    for ring_id, R, J in corpus_projections(corpus):
        if not is_r_hyperideal(R, J).verdict:
            report.skipped_hypothesis_unmet += 1
            continue
        pres = quotient(R, J)
        for M in proper_hyperideals(R):
            if J & ~M:
                continue
            image = transport_ideal(pres.projection, "image", M)
            if image == pres.ring.carrier or not is_r_hyperideal(pres.ring, image).verdict:
                continue
            for phi in STANDARD_PHIS:
                report.instances_checked += 1
                if not _phi_r(R, M, phi):
                    _viol(report, ring_id, f"M={R.set_str(M)} over N={R.set_str(J)}", str(phi), "not phi-r")


@_register(
    "THM-COLON-PHI",
    "for order-preserving reducers (all shipped ones), (N:A) is phi-r whenever "
    "N is phi-r and A is not inside N",
)
def _thm_colon_phi(corpus, report):
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            for phi in STANDARD_PHIS:
                if not _phi_r(R, N, phi):
                    continue
                subjects = [1 << x for x in range(R.order) if not N & (1 << x)]
                subjects += [A for A in enumerate_hyperideals(R) if A & ~N]
                for A in subjects:
                    C = colon(R, N, A)
                    if C == R.carrier:
                        report.skipped_hypothesis_unmet += 1
                        continue
                    report.instances_checked += 1
                    if not _phi_r(R, C, phi):
                        _viol(
                            report, e.id,
                            f"(N:A), N={R.set_str(N)}, A={R.set_str(A)}",
                            str(phi), "colon is not phi-r",
                        )


@_register(
    "COR-5",
    "the union of an ascending chain of phi-r-hyperideals is phi-r "
    "(finite chains: the union is the top member)",
)
def _cor_5(corpus, report):
    for e in corpus:
        R = e.ring
        for phi in STANDARD_PHIS:
            members = [N for N in proper_hyperideals(R) if _phi_r(R, N, phi)]
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if a & ~b and b & ~a:
                        continue
                    union = a | b
                    report.instances_checked += 1
                    if not _phi_r(R, union, phi):
                        _viol(
                            report, e.id,
                            f"{R.set_str(a)} ⊆ {R.set_str(b)}", str(phi),
                            "chain union is not phi-r",
                        )


@_register(
    "EX3-CLAIM",
    "the proper down-sets of a finite max-chain with min multiplication are "
    "r-hyperideals (finite analog of the unit-interval example; expected to "
    "fail, see the documented discrepancy)",
    expectation="falsify",
)
def _ex3_claim(corpus, report):
    from .core import validate_krasner_hyperring
    from .ideals import is_hyperideal

    for n in (3, 4, 5):
        t = chain(n)
        for top in range(1, n - 1):
            N = mask_of(range(top + 1))
            if not is_hyperideal(t, N).verdict:
                continue
            report.instances_checked += 1
            res = is_r_hyperideal(t, N)
            if not res.verdict:
                valid = validate_krasner_hyperring(t).passed
                _viol(
                    report, t.label, f"N={t.set_str(N)}",
                    _wit_str(t, res),
                    res.note
                    + "; the unit-interval original relies on injective multiplication, "
                    "which no finite chain admits (the chain table itself fails "
                    f"distributivity: valid={valid}); see the Example-3 discrepancy "
                    "note in the README",
                )


# ---------------------------------------------------------------------------
# counterexample search

@dataclass(frozen=True)
class Witness:
    property_id: str
    ring_id: str
    description: str


@dataclass(frozen=True)
class NotFound:
    property_id: str
    instances_checked: int


def _search_sum_r(corpus):
    checked = 0
    for e in corpus:
        R = e.ring
        rids = _r_ideals(R)
        for i, a in enumerate(rids):
            for b in rids[i:]:
                checked += 1
                s = ideal_sum(R, a, b)
                if s == R.carrier or not is_r_hyperideal(R, s).verdict:
                    reason = "improper" if s == R.carrier else "not r"
                    return Witness(
                        "sum-of-r-is-r", e.id,
                        f"{R.set_str(a)}+{R.set_str(b)}={R.set_str(s)} ({reason})",
                    )
    return NotFound("sum-of-r-is-r", checked)


def _search_pr_not_r(corpus):
    checked = 0
    for e in corpus:
        R = e.ring
        for N in proper_hyperideals(R):
            checked += 1
            if is_pr_hyperideal(R, N).verdict and not is_r_hyperideal(R, N).verdict:
                return Witness("pr-implies-r", e.id, f"{R.set_str(N)} is pr but not r")
    return NotFound("pr-implies-r", checked)


def _search_chain_downset(corpus):
    checked = 0
    for n in (3, 4, 5):
        t = chain(n)
        for top in range(1, n - 1):
            N = mask_of(range(top + 1))
            checked += 1
            res = is_r_hyperideal(t, N)
            if not res.verdict:
                return Witness("chain-downset-is-r", t.label, f"N={t.set_str(N)}: {res.note}")
    return NotFound("chain-downset-is-r", checked)


PROPERTIES = {
    "sum-of-r-is-r": _search_sum_r,
    "pr-implies-r": _search_pr_not_r,
    "chain-downset-is-r": _search_chain_downset,
}


def find_counterexample(property_id: str, corpus):
    """First corpus-order witness against a registered property, or NotFound."""
    if property_id not in PROPERTIES:
        raise UnknownPropertyId(property_id)
    return PROPERTIES[property_id](corpus)
