"""Exact-arithmetic toolkit for perfect, deficient-perfect and hypothetical odd perfect numbers."""

from .arith import Classification, Factorization, Kind, abundancy, classify, deficiency, gcd, sigma
from .bounds import (
    Relation,
    ThresholdVerdict,
    abundancy_n2,
    compare_to_threshold,
    euler_power_bound,
    lemma6_window,
    sign_poly,
    threshold,
)
from .euler_form import (
    EuclidForm,
    EulerForm,
    SpoofFactorization,
    euclid_decompose,
    euler_decompose,
    parse_spoof,
    spoof_sigma,
)
from .factorizer import PrimalityVerdict, Verdict, factor, is_prime, lucas_lehmer
from .formal_opn import (
    FormalOPN,
    IdentityReport,
    check_identity_chain,
    check_lemma1,
    check_lemma3,
    formal_abundancy_m,
    formal_deficiency,
    formal_m,
    formal_sigma_m,
    remark2_check,
    slowak_decompose,
)
from .sieve import Predicate, SearchCertificate, SigmaSegment, search, sigma_sieve

__version__ = "0.1.0"
