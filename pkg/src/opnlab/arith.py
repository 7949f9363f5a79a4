"""Exact divisor-sum arithmetic: sigma, abundancy, deficiency, classification.

Integers are plain Python ints (arbitrary precision) and exact ratios are
``fractions.Fraction``, which is always stored in lowest terms and compares
by cross-multiplication.  Every function accepts either a
:class:`Factorization` or a positive ``int`` (which is factored first).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from operator import mul
from typing import Iterable, Union

from .factorizer import factor, is_prime

__all__ = [
    "Factorization",
    "Kind",
    "Classification",
    "sigma",
    "sigma_prime_power",
    "abundancy",
    "deficiency",
    "classify",
    "gcd",
]


@dataclass(frozen=True)
class Factorization:
    """Sorted ``(prime, exponent)`` pairs; the empty tuple represents 1."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        factors = tuple((int(p), int(e)) for p, e in self.factors)
        object.__setattr__(self, "factors", factors)
        prev = 1
        for p, e in factors:
            if p <= prev:
                raise ValueError(f"primes must be strictly increasing: {factors}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def _trusted(cls, factors: tuple[tuple[int, int], ...]) -> Factorization:
        # Skips validation; only for output of factor().
        obj = object.__new__(cls)
        object.__setattr__(obj, "factors", factors)
        return obj

    @classmethod
    def of(cls, n: int) -> Factorization:
        return factor(n)

    @classmethod
    def from_powers(cls, powers: dict[int, int] | Iterable[tuple[int, int]]) -> Factorization:
        items = powers.items() if isinstance(powers, dict) else powers
        merged: dict[int, int] = {}
        for p, e in items:
            if e:
                merged[p] = merged.get(p, 0) + e
        return cls(tuple(sorted(merged.items())))

    @cached_property
    def value(self) -> int:
        return reduce(mul, (p**e for p, e in self.factors), 1)

    def __int__(self) -> int:
        return self.value

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: Factorization) -> Factorization:
        if not isinstance(other, Factorization):
            return NotImplemented
        merged = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return Factorization._trusted(tuple(sorted(merged.items())))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


FactorizationLike = Union[Factorization, int]


def _as_factorization(f: FactorizationLike) -> Factorization:
    if isinstance(f, Factorization):
        return f
    return factor(f)


def sigma_prime_power(p: int, e: int) -> int:
    """sigma(p**e) = 1 + p + ... + p**e, for any base p >= 2."""
    return (p ** (e + 1) - 1) // (p - 1)


def sigma(f: FactorizationLike) -> int:
    """Sum of all positive divisors."""
    f = _as_factorization(f)
    s = 1
    for p, e in f.factors:
        s *= (p ** (e + 1) - 1) // (p - 1)
    return s


def abundancy(f: FactorizationLike) -> Fraction:
    """The abundancy index sigma(N)/N as a reduced fraction."""
    f = _as_factorization(f)
    return Fraction(sigma(f), f.value)


def deficiency(f: FactorizationLike) -> int:
    """2N - sigma(N); negative for abundant N."""
    f = _as_factorization(f)
    return 2 * f.value - sigma(f)


class Kind(enum.Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    deficient_perfect: bool = False

    def __post_init__(self):
        if self.deficient_perfect and self.kind is not Kind.DEFICIENT:
            raise ValueError("only deficient numbers can be deficient-perfect")


def classify(f: FactorizationLike) -> Classification:
    """Deficient / perfect / abundant, plus the deficient-perfect flag.

    A number is deficient-perfect when D(N) > 0 and D(N) divides N.  Perfect
    numbers (D = 0) are never flagged.
    """
    f = _as_factorization(f)
    d = deficiency(f)
    if d == 0:
        return Classification(Kind.PERFECT)
    if d < 0:
        return Classification(Kind.ABUNDANT)
    return Classification(Kind.DEFICIENT, f.value % d == 0)
