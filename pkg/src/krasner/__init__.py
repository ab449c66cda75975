"""Finite commutative Krasner hyperrings: tables, hyperideals, theorem checks."""

from .core import (
    AxiomReport,
    ClassificationResult,
    HyperringTable,
    NotCanonical,
    Violation,
    bits,
    hyper_sum,
    mask_of,
    negate,
    validate_canonical_hypergroup,
    validate_krasner_hyperring,
)
from .dsl import (
    ParamOutOfRange,
    ParseError,
    ParseKind,
    SourceSpan,
    build,
    chain,
    classical_zn,
    parse_hyperring,
    product,
    serialize_hyperring,
)
from .ideals import (
    NotAHyperideal,
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
    proper_hyperideals,
    radical,
    regulars,
    socle,
)
from .classify import (
    NotProper,
    PHI_0,
    PHI_1,
    PHI_EMPTY,
    PHI_OMEGA,
    PhiReducer,
    STANDARD_PHIS,
    apply_phi,
    classify_classical,
    classify_special,
    is_phi_class,
    is_pr_hyperideal,
    is_r_hyperideal,
    parse_phi,
    phi_power,
    ring_conditions,
)
from .constructions import (
    GoodHomomorphism,
    IllFormedQuotient,
    QuotientPresentation,
    find_isomorphism,
    is_isomorphic,
    quotient,
    transport_ideal,
    validate_good_homomorphism,
)
from .explorer import (
    CorpusEntry,
    OrderTooLarge,
    default_corpus,
    enumerate_hyperrings,
    h3,
)
from .theorems import (
    NotFound,
    REGISTRY,
    TheoremReport,
    UnknownPropertyId,
    UnknownTheoremId,
    Witness,
    find_counterexample,
    run_theorem_suite,
)

__version__ = "0.1.0"
