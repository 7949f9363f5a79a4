"""
Divisor sums, abundancy and deficiency
======================================

Exact arithmetic on factorizations: sigma, the abundancy index and the
deficiency, plus the deficient / perfect / abundant classification.
"""

from opnlab import abundancy, classify, deficiency, factor, sigma

# Everything starts from a canonical factorization
f = factor(45)
print(f, "->", f.value)

# sigma is multiplicative, abundancy is an exact Fraction
print("sigma(45) =", sigma(f))
print("I(45) =", abundancy(f))
print("D(45) =", deficiency(f))

# Classification; 10 has D = 2, which divides 10
for n in (6, 10, 12, 45):
    print(n, classify(n))

# Values far beyond 64 bits are no problem
big = factor(5**61)
print("sigma(5^61) has", len(str(sigma(big))), "digits")
