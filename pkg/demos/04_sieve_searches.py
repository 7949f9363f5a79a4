"""
Sieve searches
==============

A segmented sigma sieve scans every n up to a bound.  We list the perfect
and deficient-perfect numbers and confirm there is no odd perfect number
below 10^7.
"""

import time

from opnlab import search, sigma_sieve

print(sigma_sieve(1, 11).sigma_values.tolist())

print("perfect:", search(10**5, "perfect").hits)
print("deficient-perfect:", search(10**4, "deficient-perfect").hits)

t = time.perf_counter()
cert = search(10**7, "odd-perfect")
print(f"odd perfect below 10^7: {list(cert.hits)} ({cert.checked_count} odd n, {time.perf_counter() - t:.1f}s)")
print(cert.to_json())
