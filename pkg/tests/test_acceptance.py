"""Exit criteria for the toolkit.  Every check is exact; each has a wall-clock limit."""

import time
from contextlib import contextmanager
from fractions import Fraction

from opnlab.arith import sigma
from opnlab.bounds import (
    Relation,
    abundancy_n2,
    compare_to_threshold,
    euler_power_bound,
    euler_primes,
    lemma6_window,
    threshold,
)
from opnlab.euler_form import parse_spoof, spoof_sigma
from opnlab.factorizer import factor
from opnlab.formal_opn import (
    FormalOPN,
    check_identity_chain,
    check_lemma1,
    check_lemma3,
    formal_m,
    remark2_parts,
    slowak_decompose,
)
from opnlab.sieve import Predicate, search, sigma_sieve

from _oracles import DEFICIENT_PERFECT_TO_10_4, DESCARTES, brute_deficient_perfect

K_BOUNDS = (1, 5, 9, 13)
K_FORMAL = (1, 5, 9)
T_FORMAL = range(1, 100, 2)


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def formal_grid():
    for q in euler_primes(500):
        for k in K_FORMAL:
            for t in T_FORMAL:
                yield FormalOPN(q, k, t)


def test_ac01_equality_point_is_unique():
    with within(10):
        assert abundancy_n2(5, 1) == threshold(5) == Fraction(5, 3)
        equal = [
            (q, k)
            for q in euler_primes(10**4)
            for k in K_BOUNDS
            if compare_to_threshold(q, k).relation is Relation.EQUAL
        ]
        assert equal == [(5, 1)]


def test_ac02_never_above_threshold():
    with within(10):
        zeros = []
        for q in euler_primes(10**4):
            for k in K_BOUNDS:
                v = compare_to_threshold(q, k)
                assert v.relation in (Relation.BELOW, Relation.EQUAL)
                assert v.sign_poly >= 0
                if v.sign_poly == 0:
                    zeros.append((q, k))
        assert zeros == [(5, 1)]


def test_ac03_divisibility_biconditionals():
    with within(30):
        cases = 0
        for F in formal_grid():
            assert check_lemma1(F) == (F.k == 1), F
            assert check_lemma3(F) == (F.k == 1), F
            cases += 1
        assert cases == len(euler_primes(500)) * len(K_FORMAL) * len(T_FORMAL)


def test_ac04_identity_chain():
    with within(30):
        for F in formal_grid():
            report = check_identity_chain(F)
            assert report.violations == ()
            assert [v for _, v in report.chain_values] == [F.t] * 4


def test_ac05_d_window():
    with within(5):
        for q in euler_primes(10**4):
            w = lemma6_window(q)
            assert w.d == (q + 1) // 2
            assert w.lower < w.d <= w.upper
            assert (w.d == w.upper) == (q == 5)
            assert abundancy_n2(q, 1) == 2 - Fraction(1, w.d)


def test_ac06_five_quarters_and_eight_fifths():
    with within(30):
        for q in euler_primes(10**4):
            for k in K_BOUNDS:
                _, full = euler_power_bound(q, k)
                assert full < Fraction(5, 4)
        for F in formal_grid():
            parts = remark2_parts(F)
            m = formal_m(F)
            assert parts.eight_fifths
            assert Fraction(2 * m, F.sigma_qk) > Fraction(8, 5) * Fraction(m, F.qk)
            assert parts.quotients_agree and parts.root_bound


def test_ac07_sieve_oracle_and_searches():
    with within(5):
        values = sigma_sieve(1, 10**6 + 1).sigma_values.tolist()
        mismatches = [n for n in range(1, 10**6 + 1) if values[n - 1] != sigma(factor(n))]
        assert mismatches == []
    with within(1):
        assert search(10**4, Predicate.PERFECT).hits == (6, 28, 496, 8128)
    with within(60):
        cert = search(10**8, Predicate.ODD_PERFECT)
        assert cert.hits == ()
        assert cert.checked_count == 5 * 10**7


def test_ac08_deficient_perfect_enumeration():
    with within(5):
        cert = search(10**4, Predicate.DEFICIENT_PERFECT)
    assert list(cert.hits) == DEFICIENT_PERFECT_TO_10_4 == brute_deficient_perfect(10**4)


def test_ac09_descartes_spoof():
    with within(1):
        sf = parse_spoof("3^2,7^2,11^2,13^2,22021*")
        assert sf.value == DESCARTES
        assert spoof_sigma(sf) == 2 * DESCARTES
        honest = factor(DESCARTES)
        assert honest.factors[-2:] == ((19, 2), (61, 1))
        assert sigma(honest) != 2 * DESCARTES


def test_ac10_three_factor_reconstruction():
    with within(30):
        for F in formal_grid():
            s = slowak_decompose(F)
            assert s.euler_power * s.half_sigma * F.t == F.qk * formal_m(F)
            assert s.product == F.N and s.d == F.t
