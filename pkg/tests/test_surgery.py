import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmetic import SlopePair, UnsupportedProfile, graded_surgery, spin_c_crossings, total_rank, triangle_count
from cosmetic.surgery import figure_eight_balance, parse_slope, surgery_generators

from conftest import balanced_census, box_complex, censuses, fixture, profile_of

F = Fraction

COPRIME = [(p, q) for p in range(1, 8) for q in range(1, 6) if gcd(p, q) == 1]


def brute_triangle(p, q, i, s, j):
    """Enumerate marked points (u, h + 1/2) against the epsilon-shifted line."""
    ts = [t for t in range(-200, 200) if q * s <= i + t * p <= q * (s + 1) - 1]
    y_c = F(-1, 2) + F(i + ts[j] * p, q)
    count = 0
    for u in range(-60, 61):
        for h in range(-30, 30):
            y = F(2 * h + 1, 2)
            line = y_c + F(p, q) * u  # height of the unshifted line at column u
            if s > 0 and u <= -1 and y > 0 and y <= line:
                count += 1
            if s < 0 and u >= 1 and y < 0 and y > line:
                count += 1
    return count


def test_parse_slope():
    assert parse_slope("2/1") == SlopePair(2, 1)
    assert parse_slope("3") == SlopePair(3, 1)
    for bad in ("x", "2/0", "4/2", "-1/2", "1/"):
        with pytest.raises(ValueError):
            parse_slope(bad)


@pytest.mark.parametrize("args, want", [
    ((2, 1, 0, 0), 1), ((2, 1, 1, 0), 0), ((2, 1, 1, -1), 1), ((2, 1, 0, -1), 0),
    ((1, 3, 0, 5), 3), ((1, 3, 0, -4), 3),
])
def test_spin_c_crossings(args, want):
    assert spin_c_crossings(*args) == want


def test_crossing_totals():
    for p in range(1, 13):
        for q in range(1, 13):
            if gcd(p, q) != 1:
                continue
            for s in range(-4, 5):
                assert sum(spin_c_crossings(p, q, i, s) for i in range(p)) == q
                assert sum(spin_c_crossings(p, -q, i, s) for i in range(p)) == q


def test_negative_q_crossings_mirror_index():
    for p, q in COPRIME:
        for i in range(p):
            for s in range(-3, 4):
                assert spin_c_crossings(p, -q, i, s) == spin_c_crossings(p, q, (-i) % p, s)


def test_crossing_errors():
    with pytest.raises(ValueError):
        spin_c_crossings(2, 1, 2, 0)
    with pytest.raises(ValueError):
        spin_c_crossings(2, 0, 0, 0)


@pytest.mark.parametrize("args, want", [((1, 3, 0, 2, 1), 5), ((2, 1, 1, 1, 0), 0), ((1, 1, 0, 1, 0), 0)])
def test_triangle_examples(args, want):
    assert triangle_count(*args) == want


def test_triangle_count_errors():
    with pytest.raises(ValueError, match="no crossing"):
        triangle_count(2, 1, 1, 0, 0)


def test_triangle_closed_forms():
    for q in range(1, 7):
        for s in range(-4, 5):
            for j in range(spin_c_crossings(1, q, 0, s)):
                k = triangle_count(1, q, 0, s, j)
                if s > 0:
                    assert k == q * s * (s - 1) // 2 + j * s
                elif s == 0:
                    assert k == 0


def test_triangle_zero_for_steep_slopes():
    for p in range(2, 8):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for i in range(p):
                for s in (-1, 0, 1):
                    for j in range(spin_c_crossings(p, q, i, s)):
                        assert triangle_count(p, q, i, s, j) == 0


def test_triangle_against_lattice_enumeration():
    for p, q in COPRIME:
        for i in range(p):
            for s in range(-3, 4):
                if s == 0:
                    continue
                for j in range(spin_c_crossings(p, q, i, s)):
                    assert triangle_count(p, q, i, s, j) == brute_triangle(p, q, i, s, j), (p, q, i, s, j)


def test_triangle_half_turn_symmetry():
    # rotating the picture by 180 degrees pairs window -s with window s
    for p, q in COPRIME:
        for i in range(p):
            for s in range(1, 4):
                neg = [triangle_count(p, q, i, -s, j) for j in range(spin_c_crossings(p, q, i, -s))]
                i2 = (q - 1 - i) % p
                pos = [triangle_count(p, q, i2, s, j) for j in range(spin_c_crossings(p, q, i2, s))]
                assert sorted(neg) == sorted(pos)


@pytest.mark.parametrize("args, want", [((1, 1, 0, 8), 9), ((7, 2, 1, 1), 7), ((5, 3, 0, 0), 5)])
def test_total_rank(args, want):
    assert total_rank(*args) == want


def test_graded_9_44_slope_one():
    cmp = graded_surgery(profile_of(fixture("9_44")), SlopePair(1, 1))
    want = tuple(sorted(F(x) for x in (0, 0, 1, 0, 1, -1, 0, -1, 0)))
    assert cmp.plus == (want,) and cmp.minus == (want,)
    assert cmp.match and cmp.sigma == (0,)
    assert cmp.d_plus == (0,) and cmp.d_minus == (0,)


def test_graded_9_44_relative_gradings():
    gens = surgery_generators(profile_of(fixture("9_44")), SlopePair(1, 1))
    by_height = {}
    for g in gens:
        by_height.setdefault(g.s, []).append(g.rel)
    assert sorted(by_height[1]) == [0, 1] and sorted(by_height[-1]) == [0, 1]
    assert sorted(by_height[0]) == [-1, -1, 0, 0]
    assert [g.delta_rel for g in gens if g.s == 0] == [1] * 4
    assert all(g.delta_rel == -1 for g in gens if g.s != 0)


def test_graded_9_44_slope_two():
    cmp = graded_surgery(profile_of(fixture("9_44")), SlopePair(2, 1))
    assert cmp.d_plus == (F(1, 4), F(-1, 4))
    assert cmp.d_minus == (F(-1, 4), F(1, 4))
    assert cmp.plus[0] == tuple(map(F, ("-3/4", "-3/4", "1/4", "1/4", "1/4")))
    assert cmp.plus[1] == tuple(map(F, ("-1/4", "-1/4", "-1/4", "3/4", "3/4")))
    assert cmp.match and cmp.sigma == (1, 0)


def test_graded_figure_eight_mismatch():
    cmp = graded_surgery(profile_of(fixture("figure_eight")), SlopePair(1, 1))
    assert cmp.plus == ((F(-1), F(0), F(0)),)
    assert cmp.minus == ((F(0), F(0), F(1)),)
    assert not cmp.match and cmp.sigma is None


def test_graded_requires_box_class():
    for name in ("trefoil_rh", "nonsimple_g2"):
        with pytest.raises(UnsupportedProfile):
            graded_surgery(profile_of(fixture(name)), SlopePair(1, 1))


@settings(max_examples=40, deadline=None)
@given(censuses(max_height=2))
def test_rank_and_structure(boxes):
    prof = profile_of(box_complex(boxes))
    for p, q in COPRIME:
        cmp = graded_surgery(prof, SlopePair(p, q))
        assert cmp.rank == total_rank(p, q, prof.m, prof.n_total)
        for i in range(p):
            assert len(cmp.plus[i]) == len(cmp.minus[i])
            assert cmp.d_plus[i] in cmp.plus[i] and cmp.d_minus[i] in cmp.minus[i]
        if cmp.match:
            assert all(cmp.plus[i] == cmp.minus[cmp.sigma[i]] for i in range(p))
            assert sorted(cmp.sigma) == list(range(p))


@settings(max_examples=40, deadline=None)
@given(censuses(max_height=3), st.sampled_from(COPRIME))
def test_grading_change_law(boxes, slope):
    prof = profile_of(box_complex(boxes))
    for g in surgery_generators(prof, SlopePair(*slope)):
        assert g.delta_rel == 1 - 2 * abs(g.s) - 4 * g.k
        assert (g.delta_rel == 1) == (g.s == 0)


@pytest.mark.parametrize("seed", range(200))
def test_balance_equivalence(seed):
    rng = random.Random(seed)
    boxes = balanced_census(rng)
    if seed % 2:
        D = rng.randint(-4, 4)
        boxes.append((0, D, rng.choice([1, 2])))
    prof = profile_of(box_complex(boxes))
    assert (not figure_eight_balance(prof)) == graded_surgery(prof, SlopePair(1, 1)).match
