import json
import random

import numpy as np
import pytest

import opnlab.sieve as sieve_mod
from opnlab.arith import classify, sigma
from opnlab.errors import SegmentBudgetExceeded
from opnlab.euler_form import euclid_decompose
from opnlab.factorizer import factor
from opnlab.sieve import Predicate, SearchCertificate, search, sigma_sieve

from _oracles import DEFICIENT_PERFECT_TO_10_4, brute_deficient_perfect, naive_sigma, sigma_table


def test_small_segments():
    assert sigma_sieve(1, 11).sigma_values.tolist() == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18]
    seg = sigma_sieve(496, 497)
    assert seg.sigma_values.tolist() == [992]
    assert seg[496] == 992 and len(seg) == 1
    with pytest.raises(IndexError):
        seg[497]


def test_against_divisor_accumulation():
    table = sigma_table(20_001)
    assert sigma_sieve(1, 20_001).sigma_values.tolist() == table[1:]


def test_matches_factorization_sigma_to_1e6():
    values = sigma_sieve(1, 10**6 + 1).sigma_values
    for n in range(1, 10**6 + 1):
        assert values[n - 1] == sigma(factor(n)), n


def test_random_windows_to_1e9():
    rng = random.Random(11)
    for _ in range(100):
        lo = rng.randrange(1, 10**9 - 100)
        seg = sigma_sieve(lo, lo + 100)
        for n in range(lo, lo + 100):
            assert seg[n] == sigma(factor(n))


def test_unaligned_segment_near_prime_powers():
    lo = 3**12 - 40
    seg = sigma_sieve(lo, lo + 81)
    for n in range(lo, lo + 81):
        assert seg[n] == naive_sigma(n)


def test_wide_arithmetic_path(monkeypatch):
    monkeypatch.setattr(sieve_mod, "INT64_SAFE_LIMIT", 0)
    seg = sigma_sieve(1, 3001)
    assert seg.sigma_values.dtype == object
    assert seg.sigma_values.tolist() == sigma_table(3001)[1:]
    lo = 10**12
    seg = sigma_sieve(lo, lo + 200)
    assert all(seg[n] == sigma(factor(n)) for n in range(lo, lo + 200))
    cert = search(2000, Predicate.DEFICIENT_PERFECT, segment_size=300)
    assert list(cert.hits) == [n for n in DEFICIENT_PERFECT_TO_10_4 if n <= 2000]


def test_int64_path_dtype():
    assert sigma_sieve(1, 100).sigma_values.dtype == np.int64


def test_budget_and_range_errors():
    with pytest.raises(SegmentBudgetExceeded):
        sigma_sieve(1, 100, budget=50)
    with pytest.raises(SegmentBudgetExceeded):
        search(1000, "perfect", segment_size=2**25)
    with pytest.raises(ValueError):
        sigma_sieve(0, 10)
    with pytest.raises(ValueError):
        sigma_sieve(10, 10)
    with pytest.raises(ValueError):
        search(0, "perfect")


def test_search_perfect():
    cert = search(10**4, Predicate.PERFECT)
    assert cert.hits == (6, 28, 496, 8128)
    assert cert.checked_count == 10**4
    for n in cert.hits:
        assert n % 2 == 0
        assert euclid_decompose(factor(n)).value == n


def test_search_deficient_perfect_small():
    cert = search(32, "deficient-perfect")
    assert cert.hits == (1, 2, 4, 8, 10, 16, 32)
    assert list(search(10**4, "deficient-perfect").hits) == brute_deficient_perfect(10**4)


def test_deficient_perfect_hits_recomputed():
    for n in search(10**5, "deficient-perfect").hits:
        d = 2 * n - naive_sigma(n)
        assert d > 0 and n % d == 0
        assert classify(n).deficient_perfect


def test_odd_perfect_counts():
    cert = search(10**6, "odd-perfect")
    assert cert.hits == () and cert.checked_count == 5 * 10**5
    assert search(1, "odd-perfect").checked_count == 1
    assert search(10, "odd-perfect", segment_size=3).checked_count == 5


@pytest.mark.parametrize("predicate", list(Predicate))
def test_segment_size_invariance(predicate):
    bound = 3 * 10**6 + 17
    certs = [search(bound, predicate, segment_size=s) for s in (2**16, 2**20, 2**22)]
    assert certs[0] == certs[1] == certs[2]


def test_odd_segment_boundaries():
    # odd-perfect search over tiny, odd-sized segments must see every odd n
    cert = search(1001, "odd-perfect", segment_size=7)
    assert cert.checked_count == 501


def test_parallel_matches_serial():
    serial = search(2 * 10**6, "deficient-perfect", segment_size=2**18, workers=1)
    parallel = search(2 * 10**6, "deficient-perfect", segment_size=2**18, workers=2)
    assert serial.to_json() == parallel.to_json()


def test_certificate_round_trip():
    cert = search(10**4, "perfect")
    record = json.loads(cert.to_json())
    assert record == {"schema_version": "1", "bound": 10000, "predicate": "perfect",
                      "hits": [6, 28, 496, 8128], "checked_count": 10000}
    assert SearchCertificate.from_record(record) == cert
    with pytest.raises(ValueError):
        SearchCertificate.from_record({**record, "schema_version": "0"})
