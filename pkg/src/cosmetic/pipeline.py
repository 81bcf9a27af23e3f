"""Per-knot decision procedure, fixture synthesis and batch funnels."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cfk import Arrow, Generator, UVZeroComplex, load_complex, validate
from .curves import CurveProfile, candidate_q, curve_profile
from .errors import ComplexValidationError, CosmeticError
from .reduction import KnotInvariants, analyze
from .surgery import SlopePair, figure_eight_balance, graded_surgery, triangle_count

TRIVIAL, NO_COSMETIC, HF_INDISTINGUISHABLE, INCONCLUSIVE = (
    "TrivialKnot", "NoCosmetic", "HFIndistinguishable", "Inconclusive",
)

HF_PLUS_NOTE = (
    "some acyclic summand is not a simple figure eight; the graded comparison "
    "does not apply, compute absolutely graded HF+ of the surviving surgeries instead"
)


@dataclass(frozen=True)
class Gate:
    name: str
    passed: bool  # True = the knot survives this gate
    detail: str


@dataclass
class Verdict:
    name: str
    variant: str
    gates: list[Gate] = field(default_factory=list)
    surviving_pairs: list[SlopePair] = field(default_factory=list)
    invariants: KnotInvariants | None = None
    profile: CurveProfile | None = None
    q_star: Fraction | None = None
    note: str = ""

    @property
    def failed_gates(self) -> list[str]:
        return [g.name for g in self.gates if not g.passed]


def slope_gates(profile: CurveProfile, q_star: Fraction) -> tuple[list[Gate], list[SlopePair]]:
    """The two sibling branches: (1, q*) and (2, 1).  Returns gates and candidates."""
    g, th = profile.genus, profile.thickness
    gates, cands = [], []
    integral = q_star.denominator == 1 and q_star > 0
    gates.append(Gate("QNotPositiveInteger", integral, f"q* = {q_star}"))
    if integral:
        bound = Fraction(th + 2 * g, 2 * g * (g - 1))
        ok = q_star <= bound
        gates.append(Gate(
            "ThicknessBound", ok,
            f"q* = {q_star}, (th + 2g)/(2g(g-1)) = {bound} with th = {th}, g = {g}",
        ))
        if ok:
            cands.append(SlopePair(1, int(q_star)))
    n0, n1 = profile.n_at(0), profile.n_at(1)
    ok = g == 2 and n0 == 2 * n1
    gates.append(Gate("SlopeTwoCondition", ok, f"g = {g}, n_0 = {n0}, n_1 = {n1}"))
    if ok:
        cands.append(SlopePair(2, 1))
    return gates, sorted(cands)


def _profile_or_none(decomp, inv):
    # reporting only: a knot already ruled out should not fail on its profile
    try:
        return curve_profile(decomp, inv)
    except CosmeticError:
        return None


def check_knot(c: UVZeroComplex) -> Verdict:
    problems = validate(c)
    if problems:
        raise ComplexValidationError(problems)
    reduced, decomp, inv = analyze(c)
    v = Verdict(c.name, NO_COSMETIC, invariants=inv)
    if len(reduced) == 1:
        v.variant = TRIVIAL
        return v

    def gate(name, ok, detail):
        v.gates.append(Gate(name, ok, detail))
        return ok

    if not gate("EpsilonNonzero", inv.epsilon == 0, f"epsilon = {inv.epsilon}, tau = {inv.tau}"):
        v.profile = _profile_or_none(decomp, inv)
        return v
    if not gate("GenusOne", inv.genus >= 2, f"g = {inv.genus}"):
        v.profile = _profile_or_none(decomp, inv)
        return v
    if not gate("BoyerLines", inv.alex_dd1 == 0, f"Delta''(1) = {inv.alex_dd1}"):
        v.profile = _profile_or_none(decomp, inv)
        return v

    profile = curve_profile(decomp, inv)
    v.profile = profile
    v.q_star = candidate_q(profile)
    gates, cands = slope_gates(profile, v.q_star)
    v.gates.extend(gates)
    if not cands:
        return v
    if not profile.box_class:
        v.variant = INCONCLUSIVE
        v.surviving_pairs = cands
        v.note = HF_PLUS_NOTE
        return v

    kept = []
    for slope in cands:
        if slope == SlopePair(1, 1):
            bad = figure_eight_balance(profile)
            detail = "balanced" if not bad else "unbalanced at " + ", ".join(
                f"D={D} ({lhs} != {rhs})" for D, lhs, rhs in bad
            )
            if not gate("FigureEightBalance", not bad, detail):
                continue
        cmp = graded_surgery(profile, slope)
        detail = f"slope +-{slope}: " + (
            f"multisets agree, sigma = {list(cmp.sigma)}" if cmp.match
            else "no spin^c permutation matches the graded groups"
        )
        if gate("GradedMismatch", cmp.match, detail):
            kept.append(slope)
    if kept:
        v.variant = HF_INDISTINGUISHABLE
        v.surviving_pairs = kept
    return v


# ---------------------------------------------------------------------------
# synthesis


def _box(tag: str, s: int, d: int) -> tuple[list[Generator], list[Arrow]]:
    a, b, c, e = (f"{tag}{x}" for x in "abce")
    gens = [
        Generator(a, s + 1, s + 1 - d),
        Generator(b, s, s - d),
        Generator(c, s, s - d),
        Generator(e, s - 1, s - 1 - d),
    ]
    arrows = [Arrow(c, a, "U", 1), Arrow(a, b, "V", 1), Arrow(c, e, "V", 1), Arrow(e, b, "U", 1)]
    return gens, arrows


def synthesize_box_complex(staircase_trivial: bool, boxes, name: str = "synthetic") -> UVZeroComplex:
    """Staircase (a lone generator, or the trefoil's when False) plus simple boxes.

    ``boxes`` is an iterable of (s, d, count); the census must be symmetric
    under s -> -s.
    """
    census = Counter()
    for s, d, count in boxes:
        if count < 0:
            raise ValueError(f"negative box count at (s,d)=({s},{d})")
        census[(s, d)] += count
    for (s, d), cnt in census.items():
        if census.get((-s, d), 0) != cnt:
            raise ValueError(f"asymmetric census: {cnt} boxes at ({s},{d}) but "
                             f"{census.get((-s, d), 0)} at ({-s},{d})")
    if staircase_trivial:
        gens = [Generator("x0", 0, 0)]
        arrows = []
    else:
        gens = [Generator("x0", 1, 0), Generator("x1", 0, -1), Generator("x2", -1, -2)]
        arrows = [Arrow("x1", "x0", "U", 1), Arrow("x1", "x2", "V", 1)]
    k = 0
    for (s, d) in sorted(census):
        for _ in range(census[(s, d)]):
            bg, ba = _box(f"b{k:03d}", s, d)
            gens += bg
            arrows += ba
            k += 1
    return UVZeroComplex(name, gens, arrows)


def unobstructed_census(g: int, q: int) -> dict[tuple[int, int], int]:
    """Figure-eight census whose +-1/q surgeries share graded HF-hat.

    q eights at each of heights +-(g-1) in delta-grading 0; then for the i-th
    crossing of height g-1 (relative grading m_i of its lower generator, drop
    Delta_i = 4k_i + 2(g-1) - 1) two height-0 eights in each delta-grading
    -m_i, ..., -m_i + Delta_i - 1.
    """
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    h = g - 1
    census = Counter({(h, 0): q, (-h, 0): q})
    for j in range(q):
        k = triangle_count(1, q, 0, h, j)
        m_i = -1 + 2 * k + h
        drop = 4 * k + 2 * h - 1
        for d in range(-m_i, -m_i + drop):
            census[(0, d)] += 2
    return dict(sorted(census.items()))


def synthesize_unobstructed(g: int, q: int) -> UVZeroComplex:
    census = unobstructed_census(g, q)
    return synthesize_box_complex(
        True, [(s, d, c) for (s, d), c in census.items()], name=f"unobstructed_g{g}_q{q}"
    )


# ---------------------------------------------------------------------------
# batches


@dataclass(frozen=True)
class BatchError:
    name: str
    message: str


@dataclass
class Funnel:
    total: int = 0
    pass_epsilon: int = 0
    pass_genus: int = 0
    pass_boyer_lines: int = 0
    with_candidates: int = 0
    hf_indistinguishable: list[str] = field(default_factory=list)
    inconclusive: list[str] = field(default_factory=list)
    errors: list[BatchError] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)


def load_corpus(directory) -> list:
    """Every *.cfk file in ``directory``, sorted; unreadable files become BatchError."""
    items = []
    for path in sorted(Path(directory).glob("*.cfk")):
        try:
            items.append(load_complex(path))
        except (OSError, CosmeticError) as exc:
            items.append(BatchError(path.stem, str(exc)))
    return items


def _stage_passed(v: Verdict, name: str) -> bool:
    return any(g.name == name and g.passed for g in v.gates)


def batch_funnel(inputs) -> Funnel:
    f = Funnel()
    results = []
    for item in inputs:
        if isinstance(item, BatchError):
            f.errors.append(item)
            continue
        try:
            results.append(check_knot(item))
        except CosmeticError as exc:
            f.errors.append(BatchError(item.name, str(exc)))
    results.sort(key=lambda v: v.name)
    f.errors.sort(key=lambda e: e.name)
    for v in results:
        f.total += 1
        f.verdicts.append(v)
        if v.variant == TRIVIAL:
            continue
        f.pass_epsilon += _stage_passed(v, "EpsilonNonzero")
        f.pass_genus += _stage_passed(v, "GenusOne")
        f.pass_boyer_lines += _stage_passed(v, "BoyerLines")
        if v.variant in (HF_INDISTINGUISHABLE, INCONCLUSIVE) or any(
            g.name in ("FigureEightBalance", "GradedMismatch") for g in v.gates
        ):
            f.with_candidates += 1
        if v.variant == HF_INDISTINGUISHABLE:
            f.hf_indistinguishable.append(v.name)
        elif v.variant == INCONCLUSIVE:
            f.inconclusive.append(v.name)
    return f
