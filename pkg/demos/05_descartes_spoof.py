"""
Descartes' spoof
================

198585576189 = 3^2 7^2 11^2 13^2 22021 looks odd perfect if 22021 is
(wrongly) treated as a prime.  Factoring honestly, 22021 = 19^2 * 61.
"""

from opnlab import factor, parse_spoof, sigma, spoof_sigma

sf = parse_spoof("3^2,7^2,11^2,13^2,22021*")
N = sf.value
print(N, spoof_sigma(sf) == 2 * N)

honest = factor(N)
print(honest, sigma(honest) == 2 * N)
