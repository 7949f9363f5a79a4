import random
from fractions import Fraction
from math import gcd as math_gcd

import pytest
from hypothesis import given, strategies as st

from opnlab.arith import (
    Classification,
    Factorization,
    Kind,
    abundancy,
    classify,
    deficiency,
    gcd,
    sigma,
    sigma_prime_power,
)
from opnlab.factorizer import factor

from _oracles import DESCARTES, DESCARTES_TRUE_SIGMA, naive_sigma, sigma_table

F = Factorization


def test_sigma_examples():
    assert sigma(F(((2, 1), (3, 1)))) == 12
    assert sigma(F(((5, 1),))) == 6
    descartes = F(((3, 2), (7, 2), (11, 2), (13, 2), (19, 2), (61, 1)))
    assert descartes.value == DESCARTES
    assert sigma(descartes) == DESCARTES_TRUE_SIGMA == naive_sigma(DESCARTES)


def test_sigma_beyond_64_bits():
    f = F(((5, 61),))
    assert sigma(f) == sum(5**i for i in range(62))
    assert sigma(f) > 2**64


@pytest.mark.parametrize(
    "f, expected",
    [(F(), Fraction(1)), (F(((2, 2), (7, 1))), Fraction(2)), (F(((5, 1),)), Fraction(6, 5))],
)
def test_abundancy_examples(f, expected):
    r = abundancy(f)
    assert r == expected
    assert math_gcd(r.numerator, r.denominator) == 1


@pytest.mark.parametrize("n, expected", [(32, 1), (6, 0), (18, -3)])
def test_deficiency_examples(n, expected):
    assert deficiency(factor(n)) == expected
    assert 2 * n - naive_sigma(n) == expected


@pytest.mark.parametrize(
    "n, kind, dp",
    [(10, Kind.DEFICIENT, True), (6, Kind.PERFECT, False), (12, Kind.ABUNDANT, False),
     (1, Kind.DEFICIENT, True), (9, Kind.DEFICIENT, False)],
)
def test_classify_examples(n, kind, dp):
    assert classify(n) == Classification(kind, dp)


def test_classification_invariant():
    with pytest.raises(ValueError):
        Classification(Kind.PERFECT, True)


def test_gcd_examples():
    assert gcd(0, 7) == 7
    assert gcd(12, 18) == 6
    assert sigma_prime_power(5, 5) == 3906
    assert gcd(5**5, sigma_prime_power(5, 5)) == 1


def test_factorization_validation():
    with pytest.raises(ValueError):
        F(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        F(((4, 1),))
    with pytest.raises(ValueError):
        F(((3, 0),))
    assert F().value == 1
    assert str(F(((2, 2), (7, 1)))) == "2^2 * 7"
    assert F.from_powers({7: 1, 2: 2}) == F(((2, 2), (7, 1)))


def test_multiplication_merges_exponents():
    assert (factor(12) * factor(18)).value == 216
    assert factor(12) * factor(18) == factor(216)


def test_oracle_equivalence_to_1e5():
    table = sigma_table(10**5 + 1)
    for n in range(1, 10**5 + 1):
        assert sigma(factor(n)) == table[n]


def test_multiplicativity_random_coprime_pairs():
    rng = random.Random(7)
    checked = 0
    while checked < 2000:
        a, b = rng.randrange(1, 10**6), rng.randrange(1, 10**6)
        if math_gcd(a, b) != 1:
            continue
        assert sigma(factor(a * b)) == sigma(factor(a)) * sigma(factor(b))
        checked += 1


@given(st.integers(1, 10**9))
def test_abundancy_and_deficiency_recomputed(n):
    f = factor(n)
    s = sigma(f)
    assert abundancy(f) == Fraction(s, n)
    assert deficiency(f) == 2 * n - s


@given(st.sampled_from([5, 13, 17, 29, 37, 41, 101, 997]), st.integers(1, 40))
def test_prime_power_abundancy_below_five_quarters(q, k):
    assert abundancy(F(((q, k),))) < Fraction(5, 4)
    assert abundancy(F(((q, k),))) < abundancy(F(((q, k + 1),)))


def test_five_quarters_fails_below_five():
    # I(3^k) >= 4/3 and I(2^k) >= 3/2, so the bound is specific to q >= 5
    for p in (2, 3):
        for k in range(1, 10):
            assert abundancy(F(((p, k),))) > Fraction(5, 4)
