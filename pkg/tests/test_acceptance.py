"""Acceptance criteria 1-13.

Each criterion is a function returning (ok, detail).  Under pytest every one
prints a single ``CRITERION n PASS|FAIL`` line; ``python tests/test_acceptance.py``
prints the same lines without pytest.
"""

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cosmetic import (  # noqa: E402
    SlopePair,
    analyze,
    batch_funnel,
    candidate_q,
    check_knot,
    curve_profile,
    d_invariant,
    d_sum,
    first_q_sum,
    graded_surgery,
    hook_homology_rank,
    spin_c_crossings,
    synthesize_box_complex,
    synthesize_unobstructed,
    triangle_count,
)
from cosmetic.pipeline import load_corpus, unobstructed_census  # noqa: E402
from cosmetic.surgery import figure_eight_balance, surgery_generators  # noqa: E402

from conftest import FIXTURES, balanced_census, fixture, random_census  # noqa: E402

F = Fraction


def _profile(c):
    _r, dec, inv = analyze(c)
    return curve_profile(dec, inv)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def random_box_censuses(count, seed):
    rng = random.Random(seed)
    return [random_census(rng, max_height=rng.choice([1, 2, 3])) for _ in range(count)]


def criterion_1():
    c = fixture("9_44")
    v, dt = _timed(lambda: check_knot(c))
    prof = v.profile
    ok = (
        v.variant == "HFIndistinguishable"
        and [(s.p, s.q) for s in v.surviving_pairs] == [(1, 1), (2, 1)]
        and prof.m == 0 and prof.n_at(0) == 4 and prof.n_at(1) == 2 and prof.n_at(-1) == 2
        and dt < 1.0
    )
    return ok, f"verdict {v.variant}, pairs {[str(s) for s in v.surviving_pairs]}, {dt * 1000:.1f} ms"


def criterion_2():
    prof = _profile(fixture("9_44"))
    one = graded_surgery(prof, SlopePair(1, 1))
    two = graded_surgery(prof, SlopePair(2, 1))
    want_one = tuple(sorted(map(F, (0, 0, 1, 0, 1, -1, 0, -1, 0))))
    ok = (
        one.plus == (want_one,) and one.minus == (want_one,) and one.match
        and two.d_plus == (F(1, 4), F(-1, 4)) and two.d_minus == (F(-1, 4), F(1, 4))
        and two.plus == (
            tuple(map(F, ("-3/4", "-3/4", "1/4", "1/4", "1/4"))),
            tuple(map(F, ("-1/4", "-1/4", "-1/4", "3/4", "3/4"))),
        )
        and two.minus == (two.plus[1], two.plus[0])
        and two.match and two.sigma == (1, 0)
    )
    return ok, f"slope 1 match={one.match}; slope 2 sigma={two.sigma}"


def criterion_3():
    details, ok = [], True
    for name, gate in (("trefoil_rh", "EpsilonNonzero"), ("figure_eight", "GenusOne")):
        c = fixture(name)
        v, dt = _timed(lambda: check_knot(c))
        good = v.variant == "NoCosmetic" and v.failed_gates == [gate] and dt < 0.1
        ok &= good
        details.append(f"{name}: {v.variant}{v.failed_gates} {dt * 1000:.1f} ms")
    return ok, "; ".join(details)


def criterion_4():
    ok = True
    for n in range(1, 6):
        c = synthesize_box_complex(True, [(0, 0, 2 * n), (1, 0, n), (-1, 0, n)])
        v = check_knot(c)
        ok &= v.invariants.alexander_coeffs() == [n, -4 * n, 6 * n + 1, -4 * n, n]
        ok &= v.variant == "HFIndistinguishable"
        ok &= [(s.p, s.q) for s in v.surviving_pairs] == [(1, 1), (2, 1)]
    return ok, "n = 1..5"


def criterion_5():
    def scan():
        bad = count = 0
        for p in range(2, 61):
            for q in range(1, p):
                if gcd(p, q) == 1:
                    count += 1
                    r = d_sum(p, q)
                    bad += r.recursive_sum != -r.closed_form
        return bad, count
    (bad, count), dt = _timed(scan)
    ok = bad == 0 and d_invariant(2, 1, 0) == F(1, 4) and dt < 5
    return ok, f"{count} pairs, {bad} failures, {dt:.2f} s"


def criterion_6():
    def scan():
        bad, count = [], 0
        for p in range(2, 301):
            for q in range(1, p):
                if gcd(p, q) == 1 and (q * q + 1) % p == 0:
                    count += 1
                    if first_q_sum(p, q) == 0 or d_sum(p, q).recursive_sum != 0:
                        bad.append((p, q))
        return bad, count
    (bad, count), dt = _timed(scan)
    return not bad and dt < 10, f"{count} pairs with q^2 = -1 mod p, failures {bad[:5]}, {dt:.2f} s"


def criterion_7():
    slopes = [(p, q) for p in range(1, 8) for q in range(1, 6) if gcd(p, q) == 1]
    bad = 0
    for boxes in random_box_censuses(200, seed=7):
        prof = _profile(synthesize_box_complex(True, boxes))
        for p, q in slopes:
            cmp = graded_surgery(prof, SlopePair(p, q))
            bad += sum(len(m) for m in cmp.plus) != abs(p - prof.m * q) + prof.n_total * q
    return bad == 0, f"200 complexes x {len(slopes)} slopes, {bad} failures"


def criterion_8():
    bad = 0
    for boxes in random_box_censuses(200, seed=8):
        c = synthesize_box_complex(True, boxes)
        per = Counter()
        for s, _d, n in boxes:
            per[s] += n
        g = max(x.alexander for x in c.generators)
        for s in range(-g, g + 1):
            bad += hook_homology_rank(c, s) - 1 != 2 * per[s]
    return bad == 0, f"200 complexes, {bad} failures"


def criterion_9():
    bad = checked = 0
    for q in range(1, 7):
        for s in range(0, 5):  # negative heights follow from the half-turn symmetry
            for j in range(spin_c_crossings(1, q, 0, s)):
                checked += 1
                bad += triangle_count(1, q, 0, s, j) != q * s * (s - 1) // 2 + j * s
    for p in range(2, 13):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for i in range(p):
                for s in (-1, 0, 1):
                    for j in range(spin_c_crossings(p, q, i, s)):
                        checked += 1
                        bad += triangle_count(p, q, i, s, j) != 0
    return bad == 0, f"{checked} crossings, {bad} failures"


def criterion_10():
    censuses = random_box_censuses(300, seed=10)
    censuses += [[(s, d, c) for (s, d), c in unobstructed_census(g, q).items()]
                 for g in (2, 3, 4) for q in (1, 2, 3)]
    bad = tested = 0
    for boxes in censuses:
        prof = _profile(synthesize_box_complex(True, boxes))
        if prof.genus < 2:
            continue
        q_star = candidate_q(prof)
        if q_star.denominator != 1 or q_star < 1:
            continue
        tested += 1
        gens = surgery_generators(prof, SlopePair(1, int(q_star)))
        bad += sum(g.delta_rel for g in gens) != 0
    return bad == 0 and tested >= 9, f"{tested} profiles with integer q*, {bad} nonzero sums"


def criterion_11():
    rng = random.Random(11)
    disagree = matched = 0
    for k in range(200):
        boxes = balanced_census(rng) if k % 2 == 0 else random_census(rng, max_height=2)
        if k % 4 == 2:
            boxes = balanced_census(rng) + [(0, rng.randint(-3, 3), 1)]
        prof = _profile(synthesize_box_complex(True, boxes))
        m = graded_surgery(prof, SlopePair(1, 1)).match
        matched += m
        disagree += m != (not figure_eight_balance(prof))
    return disagree == 0 and 0 < matched < 200, f"200 profiles, {matched} match, {disagree} disagreements"


def criterion_12():
    bad = []
    for g in (2, 3, 4):
        for q in (1, 2, 3):
            prof = _profile(synthesize_unobstructed(g, q))
            if not graded_surgery(prof, SlopePair(1, q)).match:
                bad.append((g, q))
    return not bad, f"9 (g, q) pairs, failures {bad}"


def criterion_13():
    first = batch_funnel(load_corpus(FIXTURES))
    second = batch_funnel(list(reversed(load_corpus(FIXTURES))))
    by_name = {v.name: v for v in first.verdicts}
    ok = (
        by_name["trefoil_rh"].failed_gates == ["EpsilonNonzero"]
        and by_name["trefoil_lh"].failed_gates == ["EpsilonNonzero"]
        and by_name["figure_eight"].failed_gates == ["GenusOne"]
        and (first.total, first.pass_epsilon, first.pass_genus, first.pass_boyer_lines,
             first.with_candidates) == (10, 7, 6, 6, 4)
        and first.hf_indistinguishable == ["9_44", "thin_n2", "thin_n3"]
        and first.inconclusive == ["nonsimple_g2"]
        and not first.errors
        and [v.name for v in second.verdicts] == [v.name for v in first.verdicts]
        and second.hf_indistinguishable == first.hf_indistinguishable
    )
    return ok, (f"total {first.total}, eps {first.pass_epsilon}, genus {first.pass_genus}, "
                f"BL {first.pass_boyer_lines}, cand {first.with_candidates}, "
                f"HF {first.hf_indistinguishable}")


CRITERIA = [globals()[f"criterion_{k}"] for k in range(1, 14)]


@pytest.mark.parametrize("k", range(1, 14))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print(f"\nCRITERION {k:2d} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(f"CRITERION {k:2d} {'PASS' if ok else 'FAIL'}: {detail}")
    sys.exit(1 if failures else 0)
