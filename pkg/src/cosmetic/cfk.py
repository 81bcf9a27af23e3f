"""UV = 0 knot Floer complexes: data model, JSON format, validation.

A complex is a finite set of bigraded generators together with arrows
``x -> y`` labelled ``U^k`` or ``V^k`` (``k = 0`` allowed for unreduced
input).  Coefficients are in F_2, so an arrow is either present or absent.

Grading conventions: a ``U^k`` arrow raises the Alexander grading by ``k``
and changes the Maslov grading by ``2k - 1``; a ``V^k`` arrow lowers the
Alexander grading by ``k`` and the Maslov grading by one.  Sources that use
the opposite U convention (U lowering Alexander) must swap the ``kind`` of
every arrow before loading.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import ComplexFormatError

KINDS = ("U", "V")


@dataclass(frozen=True, order=True)
class Generator:
    id: str
    alexander: int
    maslov: int

    @property
    def delta(self) -> int:
        return self.alexander - self.maslov


@dataclass(frozen=True, order=True)
class Arrow:
    src: str
    dst: str
    kind: str
    power: int

    @property
    def monomial(self) -> tuple[int, int]:
        """Exponents ``(a, b)`` of the coefficient ``U^a V^b``."""
        if self.power == 0:
            return (0, 0)
        return (self.power, 0) if self.kind == "U" else (0, self.power)

    def sort_key(self):
        return (self.src, self.dst, self.kind, self.power)


@dataclass(frozen=True)
class UVZeroComplex:
    name: str
    generators: tuple[Generator, ...]
    arrows: tuple[Arrow, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "_index", {g.id: g for g in self.generators})

    def __getitem__(self, gid: str) -> Generator:
        return self._index[gid]

    def __contains__(self, gid) -> bool:
        return gid in self._index

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def ids(self) -> list[str]:
        return [g.id for g in self.generators]

    def canonical(self) -> "UVZeroComplex":
        """Same complex with generators and arrows in serialization order."""
        return UVZeroComplex(
            self.name,
            sorted(self.generators, key=lambda g: g.id),
            sorted(self.arrows, key=Arrow.sort_key),
        )

    def renamed(self, mapping: dict[str, str], name: str | None = None) -> "UVZeroComplex":
        gens = [Generator(mapping[g.id], g.alexander, g.maslov) for g in self.generators]
        arrows = [Arrow(mapping[a.src], mapping[a.dst], a.kind, a.power) for a in self.arrows]
        return UVZeroComplex(self.name if name is None else name, gens, arrows)


# ---------------------------------------------------------------------------
# format


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ComplexFormatError(msg)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def from_dict(doc) -> UVZeroComplex:
    """Build a complex from an already-decoded JSON object."""
    _require(isinstance(doc, dict), "top level must be an object")
    for key in ("name", "generators", "arrows"):
        _require(key in doc, f"missing field {key!r}")
    name = doc["name"]
    _require(isinstance(name, str), "'name' must be a string")
    _require(isinstance(doc["generators"], list), "'generators' must be an array")
    _require(isinstance(doc["arrows"], list), "'arrows' must be an array")

    gens = []
    seen = set()
    for rec in doc["generators"]:
        _require(isinstance(rec, dict), "generator records must be objects")
        for key in ("id", "alexander", "maslov"):
            _require(key in rec, f"generator record missing {key!r}")
        gid = rec["id"]
        _require(isinstance(gid, str) and gid != "", "generator id must be a non-empty string")
        _require(_is_int(rec["alexander"]) and _is_int(rec["maslov"]),
                 f"generator {gid!r}: gradings must be integers")
        _require(gid not in seen, f"duplicate generator id {gid!r}")
        seen.add(gid)
        gens.append(Generator(gid, rec["alexander"], rec["maslov"]))

    arrows = []
    seen_arrows = set()
    for rec in doc["arrows"]:
        _require(isinstance(rec, dict), "arrow records must be objects")
        for key in ("from", "to", "kind", "power"):
            _require(key in rec, f"arrow record missing {key!r}")
        src, dst, kind, power = rec["from"], rec["to"], rec["kind"], rec["power"]
        _require(isinstance(src, str) and isinstance(dst, str), "arrow endpoints must be strings")
        _require(src in seen, f"arrow references unknown generator {src!r}")
        _require(dst in seen, f"arrow references unknown generator {dst!r}")
        _require(src != dst, f"arrow {src}->{dst} is a loop")
        _require(kind in KINDS, f"arrow {src}->{dst}: kind must be 'U' or 'V'")
        _require(_is_int(power), f"arrow {src}->{dst}: power must be an integer")
        _require(power >= 0, f"arrow {src}->{dst}: negative power {power}")
        arrow = Arrow(src, dst, kind, power)
        _require(arrow not in seen_arrows, f"duplicate arrow {src}->{dst} {kind}^{power}")
        seen_arrows.add(arrow)
        arrows.append(arrow)
    return UVZeroComplex(name, gens, arrows)


def parse_complex(text: str | bytes) -> UVZeroComplex:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ComplexFormatError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"malformed document: {exc}") from None
    return from_dict(doc)


def to_dict(c: UVZeroComplex) -> dict:
    c = c.canonical()
    return {
        "name": c.name,
        "generators": [
            {"id": g.id, "alexander": g.alexander, "maslov": g.maslov} for g in c.generators
        ],
        "arrows": [
            {"from": a.src, "to": a.dst, "kind": a.kind, "power": a.power} for a in c.arrows
        ],
    }


def serialize_complex(c: UVZeroComplex) -> str:
    """Canonical text form: one record per line, sorted, trailing newline."""
    d = to_dict(c)

    def block(key):
        rows = [json.dumps(r, ensure_ascii=False) for r in d[key]]
        if not rows:
            return f'  "{key}": []'
        return f'  "{key}": [\n    ' + ",\n    ".join(rows) + "\n  ]"

    return (
        "{\n"
        f'  "name": {json.dumps(d["name"], ensure_ascii=False)},\n'
        + block("generators") + ",\n"
        + block("arrows") + "\n}\n"
    )


def load_complex(path) -> UVZeroComplex:
    return parse_complex(Path(path).read_bytes())


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    """One failed check.

    ``ids`` names the offending generators.  ``key`` is the arrow for a
    grading violation and ``(x, z, kind, total_power)`` for a d^2 failure
    (``kind`` is None when the composite coefficient is 1).
    """

    kind: str  # "grading" or "d2"
    ids: tuple[str, ...]
    message: str
    key: tuple = ()

    def __str__(self) -> str:
        return self.message


def expected_target(a: Arrow, src: Generator) -> tuple[int, int]:
    """(Alexander, Maslov) that the grading laws force on ``a.dst``."""
    if a.power == 0:
        return src.alexander, src.maslov - 1
    if a.kind == "U":
        return src.alexander + a.power, src.maslov - 1 + 2 * a.power
    return src.alexander - a.power, src.maslov - 1


def validate(c: UVZeroComplex) -> list[Violation]:
    out = []
    for a in sorted(c.arrows, key=Arrow.sort_key):
        src, dst = c[a.src], c[a.dst]
        want = expected_target(a, src)
        if (dst.alexander, dst.maslov) != want:
            out.append(Violation(
                "grading", (a.src, a.dst),
                f"arrow {a.src}->{a.dst} {a.kind}^{a.power}: expected (A,M)={want} "
                f"at {a.dst}, found ({dst.alexander},{dst.maslov})",
                a.sort_key(),
            ))

    outgoing = defaultdict(list)
    for a in c.arrows:
        outgoing[a.src].append(a)
    parity = Counter()
    for first in c.arrows:
        u1, v1 = first.monomial
        for second in outgoing[first.dst]:
            u2, v2 = second.monomial
            u, v = u1 + u2, v1 + v2
            if u and v:
                continue  # UV = 0
            parity[(first.src, second.dst, (u, v))] += 1
    for (x, z, (u, v)), count in sorted(parity.items()):
        if count % 2 == 0:
            continue
        kind, power = ("U", u) if u else ("V", v) if v else (None, 0)
        label = f"{kind}^{power}" if kind else "1"
        out.append(Violation(
            "d2", (x, z),
            f"d^2 != 0: odd number ({count}) of {label} paths {x} -> {z}",
            (x, z, kind, power),
        ))
    return out
