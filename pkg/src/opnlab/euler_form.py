"""Structural decompositions: Euler form q^k n^2, Euclid form, spoof sigma.

Decompositions only check *shape*.  ``euler_decompose`` does not require the
input to be perfect (no odd perfect number is known); callers report
perfection separately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from operator import mul

from .arith import Factorization, FactorizationLike, _as_factorization, sigma, sigma_prime_power
from .errors import (
    EulerCongruenceViolation,
    EvenInput,
    MersenneCompositeError,
    NoUniqueOddExponentPrime,
    NotEuclidShape,
    SpoofSyntaxError,
    SpoofValidationError,
    VerificationError,
)
from .factorizer import is_prime, lucas_lehmer


@dataclass(frozen=True)
class EulerForm:
    """N = q**k * n**2 with q prime, q = k = 1 (mod 4), gcd(q, n) = 1, n odd."""

    q: int
    k: int
    n: int

    def __post_init__(self):
        if not is_prime(self.q) or self.q % 4 != 1:
            raise EulerCongruenceViolation(f"q={self.q} is not a prime = 1 (mod 4)")
        if self.k < 1 or self.k % 4 != 1:
            raise EulerCongruenceViolation(f"k={self.k} is not = 1 (mod 4)")
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError(f"n={self.n} must be odd and positive")
        if gcd(self.q, self.n) != 1:
            raise ValueError(f"gcd(q, n) != 1 for q={self.q}, n={self.n}")

    @property
    def value(self) -> int:
        return self.q**self.k * self.n**2


@dataclass(frozen=True)
class EuclidForm:
    """The even perfect number (2**p - 1) * 2**(p - 1)."""

    p: int

    @property
    def mersenne(self) -> int:
        return (1 << self.p) - 1

    @property
    def value(self) -> int:
        return self.mersenne << (self.p - 1)


def euler_decompose(f: FactorizationLike) -> EulerForm:
    f = _as_factorization(f)
    N = f.value
    if N % 2 == 0:
        raise EvenInput(f"{N} is even")
    odd = [(p, e) for p, e in f.factors if e % 2 == 1]
    if len(odd) != 1:
        primes = ", ".join(str(p) for p, _ in odd) or "none"
        raise NoUniqueOddExponentPrime(
            f"{N} needs exactly one prime with odd exponent; found {primes}"
        )
    q, k = odd[0]
    if q % 4 != 1:
        raise EulerCongruenceViolation(f"Euler prime candidate q={q} is not = 1 (mod 4)")
    if k % 4 != 1:
        raise EulerCongruenceViolation(f"Euler exponent k={k} (of q={q}) is not = 1 (mod 4)")
    n = reduce(mul, (p ** (e // 2) for p, e in f.factors if p != q), 1)
    return EulerForm(q, k, n)


def euclid_decompose(f: FactorizationLike) -> EuclidForm:
    f = _as_factorization(f)
    N = f.value
    if N % 2 == 1:
        raise NotEuclidShape(f"{N} is odd")
    a = f.factors[0][1]
    odd_part = N >> a
    p = a + 1
    if odd_part != (1 << p) - 1:
        raise NotEuclidShape(f"{N} = 2^{a} * {odd_part} and {odd_part} != 2^{p} - 1")
    if len(f.factors) != 2 or not is_prime(p) or not lucas_lehmer(p):
        raise MersenneCompositeError(f"2^{p} - 1 = {odd_part} is not prime")
    form = EuclidForm(p)
    if sigma(f) != 2 * N:
        raise VerificationError(f"sigma({N}) != 2 * {N} for Euclid form p={p}")
    return form


@dataclass(frozen=True)
class SpoofFactorization:
    """Factorization in which some composite bases are treated as prime."""

    factors: tuple[tuple[int, int, bool], ...]

    def __post_init__(self):
        factors = tuple((int(b), int(e), bool(ps)) for b, e, ps in self.factors)
        object.__setattr__(self, "factors", factors)
        prev = 1
        for b, e, pseudo in factors:
            if b <= prev:
                raise SpoofValidationError(f"bases must be strictly increasing at {b}")
            if e < 1:
                raise SpoofValidationError(f"exponent of {b} must be >= 1")
            if pseudo and (b < 2 or is_prime(b)):
                raise SpoofValidationError(f"{b} is prime (or < 2) and cannot be a pseudo-prime")
            if not pseudo and not is_prime(b):
                raise SpoofValidationError(f"{b} is not prime; mark it with '*' to treat it as pseudo-prime")
            prev = b
        bases = [b for b, _, _ in factors]
        for i, b in enumerate(bases):
            for c in bases[i + 1 :]:
                if gcd(b, c) != 1:
                    raise SpoofValidationError(f"bases {b} and {c} are not coprime")

    @property
    def value(self) -> int:
        return reduce(mul, (b**e for b, e, _ in self.factors), 1)

    @property
    def has_pseudo(self) -> bool:
        return any(ps for _, _, ps in self.factors)

    def honest(self) -> Factorization:
        """The true factorization of the represented integer."""
        return Factorization.of(self.value)

    def __str__(self) -> str:
        return ",".join(
            (f"{b}^{e}" if e > 1 else str(b)) + ("*" if ps else "") for b, e, ps in self.factors
        )


def spoof_sigma(sf: SpoofFactorization) -> int:
    """sigma evaluated multiplicatively as if every base were prime."""
    return reduce(mul, (sigma_prime_power(b, e) for b, e, _ in sf.factors), 1)


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*(\*)?\s*$")


def parse_spoof(text: str) -> SpoofFactorization:
    """Parse ``base^exp`` terms separated by commas; a trailing ``*`` marks a pseudo-prime.

    >>> str(parse_spoof("3^2,7^2,11^2,13^2,22021*"))
    '3^2,7^2,11^2,13^2,22021*'
    """
    terms = []
    for raw in text.split(","):
        m = _TERM.match(raw)
        if not m:
            raise SpoofSyntaxError(f"cannot parse term {raw!r}")
        base, exp, star = m.groups()
        terms.append((int(base), int(exp) if exp else 1, star is not None))
    terms.sort()
    return SpoofFactorization(tuple(terms))
