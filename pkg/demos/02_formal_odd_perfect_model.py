"""
The formal odd perfect number model
===================================

Pick an Euler prime q, exponent k and odd multiplier t.  Perfection of
N = q^k m forces m = sigma(q^k)/2 * t, sigma(m) = q^k t and
D(m) = sigma(q^(k-1)) t.  We check the gcd/quotient chain and both
divisibility biconditionals on these forced values.
"""

from opnlab import (
    FormalOPN,
    check_identity_chain,
    check_lemma1,
    check_lemma3,
    formal_deficiency,
    formal_m,
    formal_sigma_m,
    slowak_decompose,
)
from opnlab.bounds import euler_primes

F = FormalOPN(5, 5, 3)
print("m =", formal_m(F), " sigma_m =", formal_sigma_m(F), " D =", formal_deficiency(F))

report = check_identity_chain(F)
for label, value in report.chain_values:
    print(f"  {label:17s} {value}")

# divisibility tests hold exactly when k = 1
for k in (1, 5):
    F = FormalOPN(13, k, 7)
    print(f"k={k}: sigma_m/q | m -> {check_lemma1(F)},  D | m -> {check_lemma3(F)}")

print("N = q^k * sigma(q^k)/2 * d:", tuple(slowak_decompose(FormalOPN(13, 1, 7))))

# a full sweep
bad = 0
for q in euler_primes(500):
    for k in (1, 5, 9):
        for t in range(1, 100, 2):
            F = FormalOPN(q, k, t)
            ok = check_identity_chain(F).all_equal
            ok &= check_lemma1(F) == (k == 1) and check_lemma3(F) == (k == 1)
            bad += not ok
print("violations over the grid:", bad)
