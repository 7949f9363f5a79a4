"""Segmented sigma sieve and exhaustive searches built on it.

Each segment is factored in bulk: for every prime p up to sqrt(hi) the
multiples of p (a strided view) have their p-part stripped and the factor
sigma(p^e) multiplied in; whatever cofactor survives is a single prime.
Segments are independent, so searches fan them out over a process pool and
reassemble hits in order.

Values are held in int64 while hi <= INT64_SAFE_LIMIT.  sigma(n) < 16n holds
comfortably in that range (the abundancy index grows like log log n), so no
product can overflow; above the limit the same code runs on object arrays of
Python ints.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

import numpy as np

from .errors import SegmentBudgetExceeded
from .workers import ordered_map

SEGMENT_BUDGET = 1 << 24
DEFAULT_SEGMENT_SIZE = 1 << 22
INT64_SAFE_LIMIT = 1 << 59
CERTIFICATE_VERSION = "1"


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(flags))


def _first_index(lo: int, step: int, modulus: int) -> int:
    """Smallest i >= 0 with (lo + step*i) divisible by modulus."""
    if step == 1:
        return -lo % modulus
    return (-lo * ((modulus + 1) // 2)) % modulus


def _sigma_block(lo: int, count: int, step: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """(n, sigma(n)) for n = lo, lo + step, ..., count entries; step in {1, 2}."""
    hi = lo + step * count
    wide = hi > INT64_SAFE_LIMIT
    if wide:
        n = np.array([lo + step * i for i in range(count)], dtype=object)
        sig = np.full(count, 1, dtype=object)
    else:
        n = np.arange(lo, hi, step, dtype=np.int64)
        sig = np.ones(count, dtype=np.int64)
    rem = n.copy()
    for p in _base_primes(isqrt(hi - 1)):
        if step == 2 and p == 2:
            continue
        i0 = _first_index(lo, step, p)
        if i0 >= count:
            continue
        part = rem[i0::p] // p
        pw = np.full(part.shape, p, dtype=sig.dtype)
        pj = p * p
        while pj < hi:
            ij = _first_index(lo, step, pj)
            if ij >= count:
                break
            # inside the stride-p view, multiples of p^j sit every p^(j-1)
            off, stride = (ij - i0) // p, pj // p
            part[off::stride] //= p
            pw[off::stride] *= p
            pj *= p
        rem[i0::p] = part
        # sigma(p^e) = p^e + (p^e - 1)/(p - 1), avoiding p^(e+1)
        sig[i0::p] *= pw + (pw - 1) // (p - 1)
    big = rem > 1
    sig[big] *= rem[big] + 1
    return n, sig


@dataclass(frozen=True)
class SigmaSegment:
    lo: int
    hi: int
    sigma_values: np.ndarray = field(repr=False)

    def __getitem__(self, n: int) -> int:
        if not self.lo <= n < self.hi:
            raise IndexError(f"{n} outside [{self.lo}, {self.hi})")
        return int(self.sigma_values[n - self.lo])

    def __len__(self) -> int:
        return self.hi - self.lo


def sigma_sieve(lo: int, hi: int, budget: int = SEGMENT_BUDGET) -> SigmaSegment:
    """sigma(n) for every n in [lo, hi)."""
    if not 1 <= lo < hi:
        raise ValueError(f"need 1 <= lo < hi, got [{lo}, {hi})")
    if hi - lo > budget:
        raise SegmentBudgetExceeded(f"segment of {hi - lo} entries exceeds budget {budget}")
    _, sig = _sigma_block(lo, hi - lo)
    return SigmaSegment(lo, hi, sig)


class Predicate(enum.Enum):
    PERFECT = "perfect"
    ODD_PERFECT = "odd-perfect"
    DEFICIENT_PERFECT = "deficient-perfect"


@dataclass(frozen=True)
class SearchCertificate:
    bound: int
    predicate: Predicate
    hits: tuple[int, ...]
    checked_count: int

    def to_record(self) -> dict:
        return {
            "schema_version": CERTIFICATE_VERSION,
            "bound": self.bound,
            "predicate": self.predicate.value,
            "hits": list(self.hits),
            "checked_count": self.checked_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, record: dict) -> SearchCertificate:
        if record.get("schema_version") != CERTIFICATE_VERSION:
            raise ValueError(f"unsupported certificate version {record.get('schema_version')!r}")
        return cls(
            int(record["bound"]),
            Predicate(record["predicate"]),
            tuple(int(h) for h in record["hits"]),
            int(record["checked_count"]),
        )


def _scan_segment(job: tuple[int, int, str]) -> tuple[list[int], int]:
    lo, hi, pred = job
    predicate = Predicate(pred)
    if predicate is Predicate.ODD_PERFECT:
        lo |= 1
        count = (hi - lo + 1) // 2
        if count <= 0:
            return [], 0
        n, sig = _sigma_block(lo, count, step=2)
    else:
        count = hi - lo
        n, sig = _sigma_block(lo, count)
    if predicate is Predicate.DEFICIENT_PERFECT:
        d = 2 * n - sig
        positive = d > 0
        mask = positive & (n % np.where(positive, d, 1) == 0)
    else:
        mask = sig == 2 * n
    return [int(x) for x in n[mask]], count


def search(
    bound: int,
    predicate: Predicate | str,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
    budget: int = SEGMENT_BUDGET,
) -> SearchCertificate:
    """Exhaustively test every n in [1, bound] (odd n only for ODD_PERFECT).

    ``segment_size`` counts integers per segment, so results do not depend
    on it.  The certificate is built only once every segment has finished.
    """
    predicate = Predicate(predicate)
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if segment_size < 1:
        raise ValueError("segment_size must be positive")
    if segment_size > budget:
        raise SegmentBudgetExceeded(f"segment size {segment_size} exceeds budget {budget}")
    jobs = [
        (lo, min(lo + segment_size, bound + 1), predicate.value)
        for lo in range(1, bound + 1, segment_size)
    ]
    hits: list[int] = []
    checked = 0
    for seg_hits, seg_count in ordered_map(_scan_segment, jobs, workers):
        hits += seg_hits
        checked += seg_count
    return SearchCertificate(bound, predicate, tuple(hits), checked)
