"""Follow the 9_44 complex through every stage of the obstruction pipeline.

Run with ``python demos/walkthrough_9_44.py``.
"""

from importlib import resources

from cosmetic import SlopePair, analyze, check_knot, curve_profile, graded_surgery, load_complex

path = resources.files("cosmetic") / "fixtures" / "9_44.cfk"
complex_ = load_complex(path)
print(f"{complex_.name}: {len(complex_)} generators, {len(complex_.arrows)} arrows")

reduced, decomp, inv = analyze(complex_)
print(f"reduced to {len(reduced)} generators: staircase of {len(decomp.staircase.gens)}, "
      f"{len(decomp.boxes)} boxes")
print(f"genus {inv.genus}, tau {inv.tau}, epsilon {inv.epsilon}, Alexander {inv.alexander_coeffs()}")

profile = curve_profile(decomp, inv)
print(f"curve profile: m = {profile.m}, n = {profile.n}")

for slope in (SlopePair(1, 1), SlopePair(2, 1)):
    cmp = graded_surgery(profile, slope)
    print(f"\nslope +-{slope}: d+ = {[str(d) for d in cmp.d_plus]}, d- = {[str(d) for d in cmp.d_minus]}")
    for i, (plus, minus) in enumerate(zip(cmp.plus, cmp.minus)):
        print(f"  spin^c {i}: + {[str(x) for x in plus]}")
        print(f"            - {[str(x) for x in minus]}")
    print(f"  match: {cmp.match}, sigma: {cmp.sigma}")

verdict = check_knot(complex_)
print(f"\nverdict: {verdict.variant}, surviving {[str(s) for s in verdict.surviving_pairs]}")
for gate in verdict.gates:
    print(f"  [{'pass' if gate.passed else 'FAIL'}] {gate.name}: {gate.detail}")
