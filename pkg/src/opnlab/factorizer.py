"""Primality testing and integer factorization.

Primality below 2**64 is decided by Miller-Rabin with the first twelve prime
bases, which is a proven deterministic set far beyond that range.  Above it
the test is probabilistic (seeded Miller-Rabin rounds plus a strong Lucas
test), and a positive answer is reported as ``ProbablePrime``.

Factoring combines trial division, a cached smallest-prime-factor table for
small inputs and Brent's variant of Pollard rho with a fixed seed, so the
output for a given input never changes between runs.
"""

from __future__ import annotations

import enum
import random
from array import array
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import FactorizationBudgetExceeded

DETERMINISTIC_LIMIT = 1 << 64
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DEFAULT_ROUNDS = 40
DEFAULT_SEED = 0x5EED
DEFAULT_RHO_BUDGET = 1 << 23  # total Brent iterations per factor() call

SPF_LIMIT = 1 << 21
TRIAL_LIMIT = 1000

_TRIAL_PRIMES = tuple(
    p for p in range(2, TRIAL_LIMIT) if all(p % d for d in range(2, isqrt(p) + 1))
)
_spf: np.ndarray | None = None
_spf_list: array | None = None  # same table; scalar indexing is much faster than numpy


class Verdict(enum.Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable-prime"


@dataclass(frozen=True)
class PrimalityVerdict:
    verdict: Verdict
    rounds: int | None = None

    def __bool__(self) -> bool:
        return self.verdict is not Verdict.COMPOSITE

    def __str__(self) -> str:
        if self.verdict is Verdict.PROBABLE_PRIME:
            return f"ProbablePrime(rounds={self.rounds})"
        return self.verdict.name.capitalize()


PRIME = PrimalityVerdict(Verdict.PRIME)
COMPOSITE = PrimalityVerdict(Verdict.COMPOSITE)


def spf_table(limit: int = SPF_LIMIT) -> np.ndarray:
    """Smallest-prime-factor table for 0 <= n < limit (entries 0, 1 are 0)."""
    global _spf, _spf_list
    if _spf is not None and len(_spf) >= limit:
        return _spf
    spf = np.zeros(limit, dtype=np.int64)
    for p in range(2, isqrt(limit - 1) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[:2] = 0
    _spf = spf
    _spf_list = array("q", spf.tobytes())
    return spf


def _miller_rabin(n: int, a: int, d: int, s: int) -> bool:
    """One strong-probable-prime round; n odd, n - 1 = d * 2**s."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    r = isqrt(n)
    if r * r == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # binary ladder for U_d, V_d
    U, V, Qk = 0, 2, 1
    inv2 = (n + 1) // 2
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED) -> PrimalityVerdict:
    """Classify ``n`` as Prime, Composite or ProbablePrime.

    0 and 1 are Composite by convention.  A Composite verdict is always
    certain; ``rounds`` and ``seed`` only matter for n >= 2**64.
    """
    if n < 2:
        return COMPOSITE
    if n < SPF_LIMIT and _spf_list is not None:
        return PRIME if _spf_list[n] == n else COMPOSITE
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return PRIME if n == p else COMPOSITE
    if n < TRIAL_LIMIT * TRIAL_LIMIT:
        return PRIME
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < DETERMINISTIC_LIMIT:
        ok = all(_miller_rabin(n, a, d, s) for a in MR_WITNESSES)
        return PRIME if ok else COMPOSITE
    rng = random.Random(seed)
    for a in MR_WITNESSES:
        if not _miller_rabin(n, a, d, s):
            return COMPOSITE
    for _ in range(rounds):
        if not _miller_rabin(n, rng.randrange(2, n - 1), d, s):
            return COMPOSITE
    if not _strong_lucas(n):
        return COMPOSITE
    return PrimalityVerdict(Verdict.PROBABLE_PRIME, rounds)


def lucas_lehmer(p: int) -> bool:
    """True iff the Mersenne number 2**p - 1 is prime (p itself must be prime)."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"Lucas-Lehmer exponent must be a prime >= 2, got {p}")
    if p == 2:
        return True
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = s * s - 2
        # reduction mod 2**p - 1 without division
        s = (s & m) + (s >> p)
        if s >= m:
            s -= m
    return s == 0


class _Budget:
    __slots__ = ("left",)

    def __init__(self, iterations: int):
        self.left = iterations

    def spend(self, n: int, k: int) -> None:
        self.left -= k
        if self.left < 0:
            raise FactorizationBudgetExceeded(
                f"Pollard rho budget exhausted while splitting {n}"
            )


def pollard_brent(n: int, budget: _Budget, seed: int = DEFAULT_SEED) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    rng = random.Random(seed ^ n.bit_length())
    c = 1
    m = 128
    while True:
        y = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                step = min(m, r - k)
                budget.spend(n, step)
                for _ in range(step):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # the batched product collapsed; replay one step at a time
            g = 1
            while g == 1:
                budget.spend(n, 1)
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _trusted(factors):
    # arith imports this module, so bind its constructor on first use
    global _trusted
    from .arith import Factorization

    _trusted = Factorization._trusted
    return _trusted(factors)


def _factor_small(n: int) -> list[tuple[int, int]]:
    if _spf_list is None:
        spf_table()
    spf = _spf_list
    out = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def _split(n: int, out: dict[int, int], budget: _Budget, seed: int) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m < SPF_LIMIT:
            for p, e in _factor_small(m):
                out[p] = out.get(p, 0) + e
            continue
        if is_prime(m, seed=seed):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = pollard_brent(m, budget, seed)
        stack += [d, m // d]


def factor(n: int, budget: int = DEFAULT_RHO_BUDGET, seed: int = DEFAULT_SEED):
    """Canonical factorization of ``n >= 1``.

    Raises FactorizationBudgetExceeded when Pollard rho needs more than
    ``budget`` iterations in total (typically once the second-largest prime
    factor is beyond ~2**40).
    """
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    if n < SPF_LIMIT:
        return _trusted(tuple(_factor_small(n)))
    out: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        _split(n, out, _Budget(budget), seed)
    return _trusted(tuple(sorted(out.items())))
