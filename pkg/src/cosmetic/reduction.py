"""Cancellation, summand decomposition and the classical invariants.

Differentials are handled as ``{src: {dst: set of monomials}}`` where a
monomial ``(a, b)`` stands for ``U^a V^b``.  Adding coefficients is symmetric
difference of the monomial sets; products with both exponents positive vanish
because ``UV = 0``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from . import gf2
from .cfk import Arrow, Generator, UVZeroComplex
from .errors import DecompositionError

STAIRCASE, BOX, EXOTIC = "Staircase", "Box", "Exotic"


# ---------------------------------------------------------------------------
# reduction


def _differential(c: UVZeroComplex) -> dict[str, dict[str, set]]:
    d: dict[str, dict[str, set]] = {g.id: {} for g in c.generators}
    for a in c.arrows:
        d[a.src].setdefault(a.dst, set()).symmetric_difference_update({a.monomial})
    for row in d.values():
        for dst in [k for k, v in row.items() if not v]:
            del row[dst]
    return d


def _times(left: set, right: set) -> set:
    out: set = set()
    for (a1, b1) in left:
        for (a2, b2) in right:
            a, b = a1 + a2, b1 + b2
            if a and b:
                continue
            out ^= {(a, b)}
    return out


def _arrows_of(d: dict[str, dict[str, set]]) -> list[Arrow]:
    arrows = []
    for src, row in d.items():
        for dst, coeff in row.items():
            for (a, b) in coeff:
                if a:
                    arrows.append(Arrow(src, dst, "U", a))
                elif b:
                    arrows.append(Arrow(src, dst, "V", b))
                else:
                    arrows.append(Arrow(src, dst, "U", 0))
    return sorted(arrows, key=Arrow.sort_key)


def reduce(c: UVZeroComplex) -> UVZeroComplex:
    """Cancel every unit (power 0) arrow; the result has all powers >= 1.

    Arrows are cancelled smallest-(src, dst) first.  Cancelling ``x -> y``
    replaces ``d z`` by ``d z + <d z, y> d x`` for every other ``z`` hitting
    ``y`` and then drops ``x`` and ``y``.
    """
    d = _differential(c)
    incoming: dict[str, set] = defaultdict(set)
    for src, row in d.items():
        for dst in row:
            incoming[dst].add(src)

    def set_coeff(src, dst, coeff):
        if coeff:
            d[src][dst] = coeff
            incoming[dst].add(src)
        else:
            d[src].pop(dst, None)
            incoming[dst].discard(src)

    while True:
        units = sorted(
            (src, dst) for src, row in d.items() for dst, co in row.items() if (0, 0) in co
        )
        if not units:
            break
        x, y = units[0]
        dx = {dst: set(co) for dst, co in d[x].items()}
        for z in sorted(incoming[y] - {x}):
            czy = d[z][y]
            for w, cxw in dx.items():
                set_coeff(z, w, d[z].get(w, set()) ^ _times(czy, cxw))
        for gone in (x, y):
            for dst in list(d[gone]):
                incoming[dst].discard(gone)
            for src in list(incoming[gone]):
                d[src].pop(gone, None)
            d.pop(gone)
            incoming.pop(gone, None)

    gens = [g for g in c.generators if g.id in d]
    return UVZeroComplex(c.name, gens, _arrows_of(d))


# ---------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True)
class Summand:
    variant: str
    gens: tuple[str, ...]
    s: int | None = None  # Box height
    d: int | None = None  # Box delta grading
    simple: bool | None = None


@dataclass(frozen=True)
class Decomposition:
    complex: UVZeroComplex
    staircase: Summand
    boxes: tuple[Summand, ...] = ()
    exotics: tuple[Summand, ...] = ()

    @property
    def box_class(self) -> bool:
        return not self.exotics and all(b.simple for b in self.boxes)

    def summands(self) -> list[Summand]:
        return [self.staircase, *self.boxes, *self.exotics]


def _components(c: UVZeroComplex) -> list[list[str]]:
    parent = {g.id: g.id for g in c.generators}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in c.arrows:
        ra, rb = find(a.src), find(a.dst)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = defaultdict(list)
    for g in c.generators:
        groups[find(g.id)].append(g.id)
    return sorted((sorted(v) for v in groups.values()), key=lambda v: v[0])


def vertical_homology_rank(c: UVZeroComplex, ids) -> int:
    """dim of H_*(C, V-arrows only) restricted to ``ids``."""
    ids = list(ids)
    index = {g: i for i, g in enumerate(ids)}
    members = set(ids)
    bd = defaultdict(list)
    for a in c.arrows:
        if a.kind == "V" and a.src in members:
            bd[a.src].append(a.dst)
    return len(ids) - 2 * gf2.boundary_rank(bd, index)


def _classify_box(c: UVZeroComplex, ids: list[str], arrows: list[Arrow]) -> Summand | None:
    if len(ids) != 4 or len(arrows) != 4:
        return None
    out = defaultdict(list)
    inc = defaultdict(list)
    for a in arrows:
        out[a.src].append(a)
        inc[a.dst].append(a)
    tops = [g for g in ids if len(out[g]) == 2 and not inc[g]]
    bottoms = [g for g in ids if len(inc[g]) == 2 and not out[g]]
    if len(tops) != 1 or len(bottoms) != 1:
        return None
    cc, bb = tops[0], bottoms[0]
    by_kind = {a.kind: a for a in out[cc]}
    if set(by_kind) != {"U", "V"}:
        return None
    aa, ee = by_kind["U"].dst, by_kind["V"].dst
    a_out, e_out = out[aa], out[ee]
    if len(a_out) != 1 or len(e_out) != 1:
        return None
    if (a_out[0].dst, a_out[0].kind, e_out[0].dst, e_out[0].kind) != (bb, "V", bb, "U"):
        return None
    simple = all(a.power == 1 for a in arrows)
    gc = c[cc]
    order = (aa, bb, cc, ee)
    return Summand(BOX, order, s=gc.alexander, d=gc.delta, simple=simple)


def decompose(reduced: UVZeroComplex) -> Decomposition:
    """Split a reduced complex into its staircase, boxes and exotic pieces."""
    if any(a.power == 0 for a in reduced.arrows):
        raise DecompositionError("complex is not reduced (power-0 arrow present)")
    by_src = defaultdict(list)
    for a in reduced.arrows:
        by_src[a.src].append(a)

    staircases, boxes, exotics = [], [], []
    for ids in _components(reduced):
        rk = vertical_homology_rank(reduced, ids)
        if rk == 1:
            staircases.append(ids)
            continue
        if rk != 0:
            raise DecompositionError(
                f"component {ids[0]}.. has vertical homology of rank {rk}; expected 0 or 1"
            )
        arrows = [a for g in ids for a in by_src[g]]
        box = _classify_box(reduced, ids, arrows)
        if box is not None:
            boxes.append(box)
        else:
            exotics.append(Summand(EXOTIC, tuple(ids)))

    if len(staircases) != 1:
        raise DecompositionError(
            f"found {len(staircases)} non-acyclic components; a knot complex has exactly one"
        )
    ids = staircases[0]
    if len(ids) == 1:
        g = reduced[ids[0]]
        if (g.alexander, g.maslov) != (0, 0):
            raise DecompositionError(
                f"isolated staircase generator {g.id} sits at (A,M)=({g.alexander},{g.maslov})"
            )
    stair = Summand(STAIRCASE, _staircase_order(reduced, ids))
    boxes.sort(key=lambda b: (b.s, b.d, b.gens))
    return Decomposition(reduced, stair, tuple(boxes), tuple(exotics))


def _staircase_order(c: UVZeroComplex, ids: list[str]) -> tuple[str, ...]:
    """Walk the staircase from its top end; falls back to id order if not a path."""
    if len(ids) == 1:
        return tuple(ids)
    members = set(ids)
    nbrs = defaultdict(set)
    for a in c.arrows:
        if a.src in members:
            nbrs[a.src].add(a.dst)
            nbrs[a.dst].add(a.src)
    ends = [g for g in ids if len(nbrs[g]) == 1]
    if len(ends) != 2 or any(len(nbrs[g]) > 2 for g in ids):
        return tuple(ids)
    start = max(ends, key=lambda g: (c[g].alexander, g))
    order, prev = [start], None
    while len(order) < len(ids):
        nxt = [n for n in nbrs[order[-1]] if n != prev]
        prev = order[-1]
        order.append(nxt[0])
    return tuple(order)


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class KnotInvariants:
    genus: int
    thickness: int
    tau: int
    epsilon: int
    hfk: dict = field(compare=False)  # (A, M) -> rank
    alexander: dict = field(compare=False)  # exponent -> coefficient, zeros dropped
    alex_dd1: int

    def alexander_coeffs(self) -> list[int]:
        """Coefficients of t^g, ..., t^-g (highest power first)."""
        return [self.alexander.get(s, 0) for s in range(self.genus, -self.genus - 1, -1)]

    def alexander_at_one(self) -> int:
        return sum(self.alexander.values())


def distinguished_generator(decomp: Decomposition) -> Generator:
    """The staircase generator left unmatched by its V-arrows."""
    c = decomp.complex
    ids = set(decomp.staircase.gens)
    v_degree = Counter()
    for a in c.arrows:
        if a.kind == "V" and a.src in ids:
            v_degree[a.src] += 1
            v_degree[a.dst] += 1
    if any(n > 1 for n in v_degree.values()):
        raise DecompositionError("staircase V-arrows do not form a matching")
    free = sorted(g for g in ids if v_degree[g] == 0)
    if len(free) != 1:
        raise DecompositionError(
            f"staircase V-matching leaves {len(free)} generators unmatched; expected 1"
        )
    return c[free[0]]


def alexander_polynomial(c: UVZeroComplex) -> dict[int, int]:
    poly = Counter()
    for g in c.generators:
        poly[g.alexander] += -1 if g.maslov % 2 else 1
    return {s: a for s, a in sorted(poly.items()) if a}


def knot_invariants(decomp: Decomposition, reduced: UVZeroComplex | None = None) -> KnotInvariants:
    c = reduced if reduced is not None else decomp.complex
    x = distinguished_generator(decomp)
    ids = set(decomp.staircase.gens)
    eps = 0
    for a in c.arrows:
        if a.kind == "U" and a.src in ids:
            if a.dst == x.id:
                eps = 1
            elif a.src == x.id:
                eps = -1
    gens = c.generators
    deltas = [g.delta for g in gens]
    poly = alexander_polynomial(c)
    return KnotInvariants(
        genus=max(g.alexander for g in gens),
        thickness=max(deltas) - min(deltas),
        tau=x.alexander,
        epsilon=eps,
        hfk=dict(sorted(Counter((g.alexander, g.maslov) for g in gens).items())),
        alexander=poly,
        alex_dd1=sum(a * s * (s - 1) for s, a in poly.items()),
    )


def analyze(c: UVZeroComplex) -> tuple[UVZeroComplex, Decomposition, KnotInvariants]:
    """reduce, decompose and read off invariants in one call."""
    r = reduce(c)
    dec = decompose(r)
    return r, dec, knot_invariants(dec, r)
