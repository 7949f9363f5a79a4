"""Exact-rational comparisons of I(n^2) against the 2 - 5/(3q) threshold.

For an Euler-form odd perfect number, perfection pins down
I(n^2) = 2 / I(q^k) = 2 - 2(q^k - 1)/(q^(k+1) - 1), so everything here is a
function of (q, k) alone.  The difference threshold - I(n^2) has the sign of
q^(k+1) - 6q + 5, which vanishes on valid inputs only at (q, k) = (5, 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import sigma_prime_power
from .errors import CongruenceError, VerificationError
from .factorizer import is_prime

FIVE_QUARTERS = Fraction(5, 4)


def _check_q(q: int) -> None:
    if q < 5 or q % 4 != 1 or not is_prime(q):
        raise CongruenceError(f"q={q} must be a prime >= 5 with q = 1 (mod 4)")


def _check_qk(q: int, k: int, permissive: bool = False) -> None:
    _check_q(q)
    if k < 1:
        raise CongruenceError(f"k={k} must be >= 1")
    if not permissive and k % 4 != 1:
        raise CongruenceError(f"k={k} must satisfy k = 1 (mod 4)")


def abundancy_n2(q: int, k: int, permissive: bool = False) -> Fraction:
    """I(n^2) forced by perfection, 2 q^k (q - 1) / (q^(k+1) - 1)."""
    _check_qk(q, k, permissive)
    qk = q**k
    value = Fraction(2 * qk * (q - 1), qk * q - 1)
    if value != 2 - Fraction(2 * (qk - 1), qk * q - 1):
        raise VerificationError(f"closed forms of I(n^2) disagree at q={q}, k={k}")
    return value


def threshold(q: int) -> Fraction:
    """2 - 5/(3q) = (6q - 5)/(3q)."""
    _check_q(q)
    return Fraction(6 * q - 5, 3 * q)


def sign_poly(q: int, k: int, permissive: bool = False) -> int:
    """q^(k+1) - 6q + 5."""
    _check_qk(q, k, permissive)
    return q ** (k + 1) - 6 * q + 5


def sign_poly_lower_bounds(q: int, k: int, permissive: bool = False) -> tuple[int, int]:
    """The two lower bounds used to show sign_poly(q, k) >= 0.

    The first, q^2 - 6q + 5, holds for every k >= 1.  The second uses the
    congruence (k > 1 forces k >= 5) and is q^6 - 6q + 5 for k > 1, falling
    back to the first bound when k = 1.  Both are returned so callers can
    check they lead to the same sign verdict.
    """
    _check_qk(q, k, permissive)
    every_k = q * q - 6 * q + 5
    if k == 1:
        return every_k, every_k
    if permissive and k < 5:
        return every_k, q ** (k + 1) - 6 * q + 5
    return every_k, q**6 - 6 * q + 5


class Relation(enum.Enum):
    BELOW = "below"
    EQUAL = "equal"
    ABOVE = "above"


@dataclass(frozen=True)
class ThresholdVerdict:
    relation: Relation
    lhs: Fraction
    rhs: Fraction
    sign_poly: int


def compare_to_threshold(q: int, k: int, permissive: bool = False) -> ThresholdVerdict:
    lhs = abundancy_n2(q, k, permissive)
    rhs = threshold(q)
    poly = sign_poly(q, k, permissive)
    if lhs < rhs:
        rel = Relation.BELOW
    elif lhs == rhs:
        rel = Relation.EQUAL
    else:
        rel = Relation.ABOVE
    expected = Relation.BELOW if poly > 0 else Relation.EQUAL if poly == 0 else Relation.ABOVE
    if rel is not expected:
        raise VerificationError(f"sign_poly={poly} disagrees with relation {rel.value} at q={q}, k={k}")
    return ThresholdVerdict(rel, lhs, rhs, poly)


class Lemma6Window(NamedTuple):
    d: int
    lower: Fraction
    upper: Fraction
    abundancy_identity: Fraction


def lemma6_window(q: int) -> Lemma6Window:
    """For k = 1: d = (q+1)/2 with q/2 < d <= 3q/5 and I(n^2) = 2 - 1/d."""
    _check_q(q)
    d = (q + 1) // 2
    lower, upper = Fraction(q, 2), Fraction(3 * q, 5)
    if not lower < d <= upper:
        raise VerificationError(f"d={d} outside ({lower}, {upper}] for q={q}")
    identity = 2 - Fraction(1, d)
    i_n2 = abundancy_n2(q, 1)
    if i_n2 != identity:
        raise VerificationError(f"I(n^2)={i_n2} != 2 - 1/d = {identity} for q={q}")
    if not Fraction(5, 3) <= i_n2 < 2:
        raise VerificationError(f"I(n^2)={i_n2} outside [5/3, 2) for q={q}")
    return Lemma6Window(d, lower, upper, identity)


def euler_power_bound(q: int, k: int, permissive: bool = False) -> tuple[Fraction, Fraction]:
    """(I(q^(k-1)), I(q^k)), both checked to lie in [1, 5/4)."""
    _check_qk(q, k, permissive)
    prev = Fraction(sigma_prime_power(q, k - 1), q ** (k - 1))
    full = Fraction(sigma_prime_power(q, k), q**k)
    if not (1 <= prev < FIVE_QUARTERS and full < FIVE_QUARTERS):
        raise VerificationError(f"I(q^(k-1))={prev}, I(q^k)={full} violate < 5/4 at q={q}, k={k}")
    return prev, full


def euler_primes(qmax: int) -> list[int]:
    """Primes q with 5 <= q <= qmax and q = 1 (mod 4)."""
    return [q for q in range(5, qmax + 1, 4) if is_prime(q)]
