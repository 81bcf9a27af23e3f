"""Curve profile: the counts n_s, the figure-eight census e_s^d and q*.

n_s is computed algebraically.  At level s the hook complex glues the
column (generators with A <= s, V-arrows only) to the row (A >= s, U-arrows
only) along A = s; its homology has rank n_s + 1 when the distinguished
curve is horizontal.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from . import gf2
from .cfk import UVZeroComplex
from .errors import InvariantViolation, UnsupportedProfile
from .reduction import Decomposition, KnotInvariants, decompose, knot_invariants


def hook_homology_rank(reduced: UVZeroComplex, s: int, check: bool = True) -> int:
    if check:
        inv = knot_invariants(decompose(reduced), reduced)
        if inv.epsilon != 0:
            raise UnsupportedProfile(f"hook ranks need epsilon = 0, got {inv.epsilon}")
    basis = []
    for g in reduced.generators:
        if g.alexander < s:
            basis.append(("col", g.id))
        elif g.alexander > s:
            basis.append(("row", g.id))
        else:
            basis.append(("mid", g.id))
    index = {b: i for i, b in enumerate(basis)}

    def col(gid):
        return ("mid", gid) if reduced[gid].alexander == s else ("col", gid)

    def row(gid):
        return ("mid", gid) if reduced[gid].alexander == s else ("row", gid)

    bd = defaultdict(list)
    for a in reduced.arrows:
        src_a = reduced[a.src].alexander
        if a.kind == "V" and src_a <= s:
            bd[col(a.src)].append(col(a.dst))
        elif a.kind == "U" and src_a >= s:
            bd[row(a.src)].append(row(a.dst))
    return len(basis) - 2 * gf2.boundary_rank(bd, index)


@dataclass(frozen=True)
class CurveProfile:
    genus: int
    thickness: int
    tau: int
    epsilon: int
    m: int
    n: dict | None = field(default=None, compare=False)  # s -> n_s (nonzero only); None if eps != 0
    e: dict | None = field(default=None, compare=False)  # (s, d) -> count; None unless box_class
    box_class: bool = False

    @property
    def n_total(self) -> int:
        return sum(self.n.values()) if self.n else 0

    def n_at(self, s: int) -> int:
        if self.n is None:
            raise UnsupportedProfile("n_s is undefined when epsilon != 0")
        return self.n.get(s, 0)


def curve_profile(decomp: Decomposition, inv: KnotInvariants) -> CurveProfile:
    m = 2 * inv.tau - inv.epsilon
    box_class = inv.epsilon == 0 and decomp.box_class
    e = None
    if box_class:
        e = dict(sorted(Counter((b.s, b.d) for b in decomp.boxes).items()))
    if inv.epsilon != 0:
        return CurveProfile(inv.genus, inv.thickness, inv.tau, inv.epsilon, m, None, e, False)

    g = inv.genus
    n = {}
    for s in range(-g, g + 1):
        rk = hook_homology_rank(decomp.complex, s, check=False)
        if rk < 1:
            raise InvariantViolation(f"hook homology at level {s} has rank {rk} < 1")
        if rk > 1:
            n[s] = rk - 1
    for s, v in n.items():
        if n.get(-s, 0) != v:
            raise InvariantViolation(f"n_{s} = {v} but n_{-s} = {n.get(-s, 0)}")
        if abs(s) >= g:
            raise InvariantViolation(f"n_{s} = {v} is nonzero at |s| >= genus {g}")
    if box_class:
        per_height = Counter()
        for (s, d), cnt in e.items():
            per_height[s] += cnt
            if e.get((-s, d), 0) != cnt:
                raise InvariantViolation(f"figure-eight census is asymmetric at (s,d)=({s},{d})")
        for s in set(n) | set(per_height):
            if n.get(s, 0) != 2 * per_height[s]:
                raise InvariantViolation(
                    f"n_{s} = {n.get(s, 0)} disagrees with 2 x {per_height[s]} boxes at height {s}"
                )
    return CurveProfile(inv.genus, inv.thickness, inv.tau, inv.epsilon, m, n, e, box_class)


def candidate_q(profile: CurveProfile) -> Fraction:
    """q* = (n_0 + 2 sum_{s>=1} n_s) / (4 sum_{s>=1} s^2 n_s), exact."""
    if profile.epsilon != 0 or profile.n is None:
        raise UnsupportedProfile("q* needs epsilon = 0")
    if profile.genus <= 1:
        raise UnsupportedProfile(f"q* needs genus >= 2, got {profile.genus}")
    num = profile.n_at(0) + 2 * sum(v for s, v in profile.n.items() if s > 0)
    den = 4 * sum(s * s * v for s, v in profile.n.items() if s > 0)
    if den == 0:
        raise UnsupportedProfile("q* denominator vanishes (no vertical segments above height 0)")
    return Fraction(num, den)
