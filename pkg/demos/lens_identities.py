"""Tabulate lens-space d-invariants and the two sum formulas.

Run with ``python demos/lens_identities.py``.
"""

from math import gcd

from cosmetic import d_sum, d_table, first_q_sum

for p, q in ((2, 1), (5, 2), (7, 3)):
    print(f"d(L({p},{q}), i) = {[str(d) for d in d_table(p, q)]}")

print("\n p  q  recursive  closed-form")
for p in range(2, 9):
    for q in range(1, p):
        if gcd(p, q) == 1:
            r = d_sum(p, q)
            print(f"{p:2d} {q:2d}  {str(r.recursive_sum):>9}  {str(r.closed_form):>11}")

print("\npairs with q^2 = -1 mod p (p <= 30): first-q sum is never zero")
for p in range(2, 31):
    for q in range(1, p):
        if gcd(p, q) == 1 and (q * q + 1) % p == 0:
            print(f"  L({p},{q}): first_q_sum = {first_q_sum(p, q)}")
