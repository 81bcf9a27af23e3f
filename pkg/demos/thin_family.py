"""Synthesize the thin family and a few unobstructed profiles, then check each.

Run with ``python demos/thin_family.py``.
"""

from cosmetic import check_knot, synthesize_box_complex, synthesize_unobstructed

print("thin family: boxes (0,0)x2n, (+-1,0)xn on a trivial staircase")
for n in range(1, 6):
    v = check_knot(synthesize_box_complex(True, [(0, 0, 2 * n), (1, 0, n), (-1, 0, n)], name=f"thin_{n}"))
    print(f"  n={n}: Alexander {v.invariants.alexander_coeffs()}  {v.variant} "
          f"{[str(s) for s in v.surviving_pairs]}")

print("\nunobstructed synthesis: profiles built to survive slope 1/q")
for g in (2, 3, 4):
    for q in (1, 2, 3):
        v = check_knot(synthesize_unobstructed(g, q))
        print(f"  g={g} q={q}: q* = {v.q_star}, {v.variant} {[str(s) for s in v.surviving_pairs]}")
