"""Machine-readable report records (plain dicts with a fixed key order)."""

from __future__ import annotations

import json

from .curves import CurveProfile
from .pipeline import Funnel, Verdict
from .reduction import KnotInvariants
from .surgery import GradedSurgeryComparison


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def invariants_record(inv: KnotInvariants, profile: CurveProfile | None, q_star=None) -> dict:
    return {
        "genus": inv.genus,
        "thickness": inv.thickness,
        "tau": inv.tau,
        "epsilon": inv.epsilon,
        "m": 2 * inv.tau - inv.epsilon,
        "n": None if profile is None or profile.n is None
        else {str(s): v for s, v in sorted(profile.n.items())},
        "e": None if profile is None or profile.e is None
        else {f"{s},{d}": c for (s, d), c in sorted(profile.e.items())},
        "q_star": None if q_star is None else _frac(q_star),
        "alexander": inv.alexander_coeffs(),
        "alex_dd1": inv.alex_dd1,
    }


def verdict_record(v: Verdict) -> dict:
    return {
        "name": v.name,
        "verdict": v.variant,
        "gates": [{"name": g.name, "passed": g.passed, "detail": g.detail} for g in v.gates],
        "surviving_pairs": [[s.p, s.q] for s in v.surviving_pairs],
        "invariants": invariants_record(v.invariants, v.profile, v.q_star),
        "note": v.note,
    }


def funnel_record(f: Funnel) -> dict:
    return {
        "total": f.total,
        "pass_epsilon": f.pass_epsilon,
        "pass_genus": f.pass_genus,
        "pass_boyer_lines": f.pass_boyer_lines,
        "with_candidates": f.with_candidates,
        "hf_indistinguishable": list(f.hf_indistinguishable),
        "inconclusive": list(f.inconclusive),
        "errors": [{"name": e.name, "message": e.message} for e in f.errors],
    }


def surgery_record(name: str, cmp: GradedSurgeryComparison) -> dict:
    return {
        "name": name,
        "slope": [cmp.slope.p, cmp.slope.q],
        "spin_c": [
            {
                "index": i,
                "d_plus": _frac(cmp.d_plus[i]),
                "d_minus": _frac(cmp.d_minus[i]),
                "plus": [_frac(x) for x in cmp.plus[i]],
                "minus": [_frac(x) for x in cmp.minus[i]],
            }
            for i in range(cmp.slope.p)
        ],
        "match": cmp.match,
        "sigma": None if cmp.sigma is None else list(cmp.sigma),
        "rank": cmp.rank,
    }


def dumps(record) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False) + "\n"
