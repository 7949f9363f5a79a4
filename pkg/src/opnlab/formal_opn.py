"""A formal model of a hypothetical odd perfect number N = q^k * m.

No odd perfect number is known, so the identities that would hold for one
cannot be checked on an example.  Instead the model takes the three
parameters that perfection leaves free, the Euler prime ``q``, its exponent
``k`` and an odd multiplier ``t``, and builds the integers that the equation
sigma(q^k) * sigma(m) = 2 * q^k * m forces:

* ``m = sigma(q^k)/2 * t`` stands in for the square part n^2,
* ``sigma_m = q^k * t`` is the value sigma(m) is *forced* to take,
* ``deficiency = sigma(q^(k-1)) * t`` is the forced value of D(m).

Note that ``sigma_m`` is an assigned quantity, not the true divisor sum of
``m``.  The checks below therefore test the algebra relating these
quantities (gcd identities, divisibility biconditionals, the three-factor
decomposition), which is exactly the part that is verifiable.  ``m`` is not
required to be a perfect square: none of the checked identities use it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import NamedTuple

from .arith import sigma_prime_power
from .errors import CongruenceError
from .factorizer import is_prime

SMALLEST_EULER_PRIME = 5
LITERATURE_MIN_T = 3


@dataclass(frozen=True)
class FormalOPN:
    q: int
    k: int
    t: int
    strict: bool = field(default=False, compare=False)

    def __post_init__(self):
        q, k, t = self.q, self.k, self.t
        if q < SMALLEST_EULER_PRIME or q % 4 != 1 or not is_prime(q):
            raise CongruenceError(f"q={q} must be a prime >= 5 with q = 1 (mod 4)")
        if k < 1 or k % 4 != 1:
            raise CongruenceError(f"k={k} must satisfy k = 1 (mod 4)")
        if t < 1 or t % 2 == 0:
            raise ValueError(f"t={t} must be odd and positive")
        if self.strict and t < LITERATURE_MIN_T:
            raise ValueError(f"strict mode requires t >= {LITERATURE_MIN_T}, got t={t}")
        if self.sigma_qk % 4 != 2:
            raise AssertionError(f"sigma({q}^{k}) = {self.sigma_qk} is not 2 (mod 4)")

    @cached_property
    def qk(self) -> int:
        return self.q**self.k

    @cached_property
    def sigma_qk(self) -> int:
        return sigma_prime_power(self.q, self.k)

    @cached_property
    def sigma_qk_minus_1(self) -> int:
        return sigma_prime_power(self.q, self.k - 1)

    @property
    def N(self) -> int:
        return self.qk * formal_m(self)


def formal_m(F: FormalOPN) -> int:
    return F.sigma_qk // 2 * F.t


def formal_sigma_m(F: FormalOPN) -> int:
    """The value sigma(m) must take for N to be perfect (not sigma of ``formal_m``)."""
    return F.qk * F.t


def formal_deficiency(F: FormalOPN) -> int:
    return F.sigma_qk_minus_1 * F.t


@dataclass(frozen=True)
class IdentityReport:
    chain_values: tuple[tuple[str, int | None], ...]
    all_equal: bool
    lemma1_holds: bool
    lemma3_holds: bool
    gcd_value: int
    violations: tuple[str, ...] = ()


def _exact_quotient(a: int, b: int, label: str, violations: list[str]) -> int | None:
    q, r = divmod(a, b)
    if r:
        violations.append(f"{label}: {b} does not divide {a}")
        return None
    return q


def check_identity_chain(F: FormalOPN) -> IdentityReport:
    """Recompute the four quantities that must all equal ``t``.

    ``deficiency_ratio`` = D / sigma(q^(k-1)), ``sigma_quotient`` = sigma_m / q^k,
    ``double_m_ratio`` = 2m / sigma(q^k) and ``gcd`` = gcd(m, sigma_m).
    A non-exact division is recorded as a violation rather than raised.
    """
    m, sm, dm = formal_m(F), formal_sigma_m(F), formal_deficiency(F)
    violations: list[str] = []
    if 2 * m - sm != dm:
        violations.append(f"2m - sigma_m = {2 * m - sm} != D = {dm}")
    g = gcd(m, sm)
    chain = (
        ("deficiency_ratio", _exact_quotient(dm, F.sigma_qk_minus_1, "deficiency_ratio", violations)),
        ("sigma_quotient", _exact_quotient(sm, F.qk, "sigma_quotient", violations)),
        ("double_m_ratio", _exact_quotient(2 * m, F.sigma_qk, "double_m_ratio", violations)),
        ("gcd", g),
    )
    for label, value in chain:
        if value is not None and value != F.t:
            violations.append(f"{label} = {value} != t = {F.t}")
    all_equal = all(v == F.t for _, v in chain)
    return IdentityReport(
        chain_values=chain,
        all_equal=all_equal,
        lemma1_holds=check_lemma1(F),
        lemma3_holds=check_lemma3(F),
        gcd_value=g,
        violations=tuple(violations),
    )


def check_lemma1(F: FormalOPN) -> bool:
    """Does sigma_m / q (= q^(k-1) * t) divide m?  Expected exactly when k = 1."""
    return formal_m(F) % (formal_sigma_m(F) // F.q) == 0


def check_lemma3(F: FormalOPN) -> bool:
    """Does the forced deficiency divide m?  Expected exactly when k = 1."""
    return formal_m(F) % formal_deficiency(F) == 0


class SlowakDecomposition(NamedTuple):
    euler_power: int
    half_sigma: int
    d: int

    @property
    def product(self) -> int:
        return self.euler_power * self.half_sigma * self.d

    @property
    def d_exceeds_one(self) -> bool:
        return self.d > 1

    def meets_lower_bound(self, minimum: int = LITERATURE_MIN_T) -> bool:
        return self.d >= minimum


def slowak_decompose(F: FormalOPN) -> SlowakDecomposition:
    """Split N as q^k * sigma(q^k)/2 * d with d = t."""
    return SlowakDecomposition(F.qk, F.sigma_qk // 2, F.t)


def formal_abundancy_m(F: FormalOPN) -> Fraction:
    """sigma_m / m reduced; equals 2 / I(q^k) and does not depend on t."""
    return Fraction(formal_sigma_m(F), formal_m(F))


class Remark2Parts(NamedTuple):
    quotients_agree: bool
    eight_fifths: bool
    root_bound_applies: bool
    root_bound: bool

    def __bool__(self) -> bool:
        return self.quotients_agree and self.eight_fifths and self.root_bound


def remark2_parts(F: FormalOPN) -> Remark2Parts:
    m, sm = formal_m(F), formal_sigma_m(F)
    double_ratio = Fraction(2 * m, F.sigma_qk)
    agree = Fraction(sm, F.qk) == double_ratio
    eight_fifths = double_ratio > Fraction(8, 5) * Fraction(m, F.qk)
    applies = F.qk * F.qk < m
    root = Fraction(m, F.qk) > isqrt(m) if applies else True
    return Remark2Parts(agree, eight_fifths, applies, root)


def remark2_check(F: FormalOPN) -> bool:
    """(i) sigma_m/q^k = 2m/sigma(q^k); (ii) 2m/sigma(q^k) > (8/5)(m/q^k);
    (iii) when q^(2k) < m, m/q^k > isqrt(m).  All exact."""
    return bool(remark2_parts(F))
