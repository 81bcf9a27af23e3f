"""Graded HF-hat of +-p/q surgery on a box-class knot, per spin^c structure.

Picture: the meridian is the vertical line u = 0 in the plane covering the
punctured torus, with marked points at (u, h + 1/2) for integers u, h.  The
line for spin^c i and slope p/q > 0 crosses the meridian at heights
y = -1/2 + (i + t p)/q (t in Z), shifted up by an infinitesimal epsilon.  The
crossing with parameter t lies in the height-s window iff
q s <= i + t p <= q (s + 1) - 1.

Each crossing in window s of a simple figure eight at (s, d) contributes two
generators with relative gradings -1 + 2k + |s| - d and 2k + |s| - d, where k
counts marked points in the triangle cut off by the line, the meridian and
the horizontal through the origin.  Passing to -p/q moves each such
generator by 1 - 2|s| - 4k.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .curves import CurveProfile
from .errors import UnsupportedProfile
from .lens import d_table


@dataclass(frozen=True, order=True)
class SlopePair:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"slope {self.p}/{self.q}: p and q must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not in lowest terms")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def parse_slope(text: str) -> SlopePair:
    """'P/Q' or 'P' (Q defaults to 1)."""
    head, sep, tail = text.strip().partition("/")
    try:
        p = int(head)
        q = int(tail) if sep else 1
    except ValueError:
        raise ValueError(f"cannot parse slope {text!r}; expected P/Q") from None
    return SlopePair(p, q)


def _t_range(p: int, q: int, i: int, s: int) -> range:
    lo = -((i - q * s) // p)  # ceil((q s - i) / p)
    hi = (q * (s + 1) - 1 - i) // p
    return range(lo, hi + 1)


def crossing_params(p: int, q: int, i: int, s: int) -> list[int]:
    """Values t of the crossings in window s for spin^c i, ascending (q > 0)."""
    if not 0 <= i < p:
        raise ValueError(f"spin^c index {i} outside [0, {p})")
    if q <= 0:
        raise ValueError("crossing_params needs q > 0")
    return list(_t_range(p, q, i, s))


def spin_c_crossings(p: int, q: int, i: int, s: int) -> int:
    if p < 1 or q == 0:
        raise ValueError(f"need p > 0 and q != 0, got p={p}, q={q}")
    if not 0 <= i < p:
        raise ValueError(f"spin^c index {i} outside [0, {p})")
    if q < 0:
        # reflecting the picture sends the line for i to the line for -i
        return len(_t_range(p, -q, (-i) % p, s))
    return len(_t_range(p, q, i, s))


def triangle_count(p: int, q: int, i: int, s: int, j: int) -> int:
    """Marked points inside the triangle of the j-th crossing in window s.

    For s > 0 the triangle lies left of the meridian and points on the
    unshifted line count; for s < 0 it lies to the right and they do not.
    """
    ts = crossing_params(p, q, i, s)
    if not 0 <= j < len(ts):
        raise ValueError(f"no crossing {j} in window {s} for spin^c {i} (have {len(ts)})")
    if s == 0:
        return 0
    n = i + ts[j] * p  # crossing height is -1/2 + n/q
    k = 0
    if s > 0:
        # rows y = r + 1/2 with r + 1/2 < -1/2 + n/q; points u <= -1 with u p >= r q + q - n
        r = 0
        while q * (r + 1) < n:
            k += (n - q * (r + 1)) // p
            r += 1
    else:
        # rows y = -(r + 1/2) above the crossing; points u >= 1 with u p < -r q - n
        r = 0
        while r * q < -n:
            k += (-r * q - n - 1) // p
            r += 1
    return k


def total_rank(p: int, q: int, m: int, n: int) -> int:
    return abs(p - m * q) + n * abs(q)


@dataclass(frozen=True)
class SurgeryGenerator:
    spin_c: int
    s: int
    d: int
    k: int
    rel: int  # relative grading for +p/q

    @property
    def delta_rel(self) -> int:
        return 1 - 2 * abs(self.s) - 4 * self.k


def surgery_generators(profile: CurveProfile, slope: SlopePair) -> list[SurgeryGenerator]:
    """Non-distinguished generators of HF-hat(+p/q), in (spin^c, s, d, t) order."""
    _require_box_class(profile)
    p, q = slope.p, slope.q
    out = []
    for i in range(p):
        for (s, d), count in sorted(profile.e.items()):
            for j in range(spin_c_crossings(p, q, i, s)):
                k = triangle_count(p, q, i, s, j)
                base = 2 * k + abs(s) - d
                for _ in range(count):
                    out.append(SurgeryGenerator(i, s, d, k, base - 1))
                    out.append(SurgeryGenerator(i, s, d, k, base))
    return out


def _require_box_class(profile: CurveProfile) -> None:
    if profile.epsilon != 0:
        raise UnsupportedProfile(f"graded comparison needs epsilon = 0, got {profile.epsilon}")
    if not profile.box_class or profile.e is None:
        raise UnsupportedProfile("graded comparison needs every acyclic summand to be a simple box")


@dataclass(frozen=True)
class GradedSurgeryComparison:
    slope: SlopePair
    d_plus: tuple[Fraction, ...]
    d_minus: tuple[Fraction, ...]
    plus: tuple[tuple[Fraction, ...], ...]  # sorted multiset per spin^c
    minus: tuple[tuple[Fraction, ...], ...]
    match: bool
    sigma: tuple[int, ...] | None  # plus(i) == minus(sigma[i])
    delta_sum: int  # sum of 1 - 2|s| - 4k over non-distinguished generators

    @property
    def rank(self) -> int:
        return sum(len(m) for m in self.plus)


def match_spin_c(plus, minus) -> tuple[int, ...] | None:
    """A permutation sigma with plus[i] == minus[sigma[i]], or None."""
    free = defaultdict(list)
    for j, ms in enumerate(minus):
        free[ms].append(j)
    sigma = []
    for ms in plus:
        bucket = free.get(ms)
        if not bucket:
            return None
        sigma.append(bucket.pop(0))
    return tuple(sigma)


def graded_surgery(profile: CurveProfile, slope: SlopePair) -> GradedSurgeryComparison:
    gens = surgery_generators(profile, slope)
    p, q = slope.p, slope.q
    d_plus = d_table(p, q)
    d_minus = d_table(p, -q)
    rel_plus = [[0] for _ in range(p)]
    rel_minus = [[0] for _ in range(p)]
    for g in gens:
        rel_plus[g.spin_c].append(g.rel)
        rel_minus[g.spin_c].append(g.rel + g.delta_rel)
    plus = tuple(tuple(sorted(d_plus[i] + r for r in rel_plus[i])) for i in range(p))
    minus = tuple(tuple(sorted(d_minus[i] + r for r in rel_minus[i])) for i in range(p))
    sigma = match_spin_c(plus, minus)
    return GradedSurgeryComparison(
        slope, d_plus, d_minus, plus, minus, sigma is not None, sigma,
        sum(g.delta_rel for g in gens),
    )


def figure_eight_balance(profile: CurveProfile) -> list[tuple[int, int, int]]:
    """Failures of the slope-1 balance e_0^D = sum_{s != 0} sum_{|d - D| < s^2} e_s^d.

    Returns (D, lhs, rhs) for every D where the two sides differ; an empty
    list means the census passes.
    """
    _require_box_class(profile)
    e = profile.e
    candidates = set()
    for (s, d) in e:
        if s == 0:
            candidates.add(d)
        else:
            candidates.update(range(d - s * s + 1, d + s * s))
    bad = []
    for D in sorted(candidates):
        lhs = e.get((0, D), 0)
        rhs = sum(c for (s, d), c in e.items() if s != 0 and abs(d - D) < s * s)
        if lhs != rhs:
            bad.append((D, lhs, rhs))
    return bad
