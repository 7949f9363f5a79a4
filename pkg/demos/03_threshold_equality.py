"""
I(n^2) against 2 - 5/(3q)
=========================

For a hypothetical odd perfect number q^k n^2 the abundancy of n^2 is a
function of (q, k).  It never exceeds 2 - 5/(3q), and meets it only at
q = 5, k = 1.  The sign of q^(k+1) - 6q + 5 tells the same story.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from opnlab import abundancy_n2, compare_to_threshold, lemma6_window, threshold
from opnlab.bounds import euler_primes

for q, k in [(5, 1), (13, 1), (5, 5)]:
    v = compare_to_threshold(q, k)
    print(f"q={q:2d} k={k}: I(n^2)={v.lhs}  threshold={v.rhs}  {v.relation.value}  poly={v.sign_poly}")

print("d window at q=13:", lemma6_window(13))

qs = euler_primes(400)
gap = [float(threshold(q) - abundancy_n2(q, 1)) for q in qs]
plt.semilogy(qs, [g if g > 0 else 1e-12 for g in gap], "o", ms=3)
plt.xlabel("q")
plt.ylabel("threshold - I(n^2)  (k = 1)")
plt.savefig("threshold_gap.png", dpi=100)
print("gap is zero only at q =", [q for q, g in zip(qs, gap) if g == 0])
