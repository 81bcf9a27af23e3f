"""Command line front end.

Exit codes: 0 success, 1 usage/parse error or unreadable input, 2 the input
complex fails validation, 3 an internal invariant check failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report
from .cfk import load_complex, validate
from .curves import candidate_q, curve_profile
from .errors import (
    ComplexFormatError,
    ComplexValidationError,
    DecompositionError,
    InvariantViolation,
    UnsupportedProfile,
)
from .lens import d_invariant, d_table
from .pipeline import batch_funnel, check_knot, load_corpus
from .reduction import analyze
from .render import render_curves
from .surgery import graded_surgery, parse_slope

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _load_valid(path):
    c = load_complex(path)
    problems = validate(c)
    if problems:
        raise ComplexValidationError(problems)
    return c


def _profile(c):
    reduced, decomp, inv = analyze(c)
    return inv, curve_profile(decomp, inv)


def cmd_validate(args, out) -> int:
    c = load_complex(args.file)
    problems = validate(c)
    if args.json:
        out.write(report.dumps({
            "name": c.name,
            "valid": not problems,
            "violations": [
                {"kind": v.kind, "ids": list(v.ids), "message": v.message} for v in problems
            ],
        }))
    else:
        if problems:
            for v in problems:
                out.write(f"{v.kind}: {v.message}\n")
        else:
            out.write(f"{c.name}: valid ({len(c.generators)} generators, {len(c.arrows)} arrows)\n")
    return EXIT_INVALID if problems else EXIT_OK


def cmd_invariants(args, out) -> int:
    c = _load_valid(args.file)
    inv, prof = _profile(c)
    q_star = None
    if prof.n is not None and prof.genus >= 2:
        try:
            q_star = candidate_q(prof)
        except UnsupportedProfile:
            q_star = None
    rec = report.invariants_record(inv, prof, q_star)
    if args.json:
        out.write(report.dumps({"name": c.name, "invariants": rec}))
        return EXIT_OK
    out.write(f"{c.name}\n")
    for key, val in rec.items():
        if isinstance(val, dict):
            val = ", ".join(f"{k}: {v}" for k, v in val.items()) or "-"
        out.write(f"  {key}: {val}\n")
    return EXIT_OK


def cmd_surgery(args, out) -> int:
    c = _load_valid(args.file)
    _inv, prof = _profile(c)
    cmp = graded_surgery(prof, args.slope)
    if args.json:
        out.write(report.dumps(report.surgery_record(c.name, cmp)))
        return EXIT_OK
    out.write(f"{c.name}: slopes +-{args.slope}, rank {cmp.rank}\n")
    for i in range(args.slope.p):
        plus = " ".join(_frac(x) for x in cmp.plus[i])
        minus = " ".join(_frac(x) for x in cmp.minus[i])
        out.write(f"  spin^c {i}: d+ = {_frac(cmp.d_plus[i])}, d- = {_frac(cmp.d_minus[i])}\n")
        out.write(f"    +{args.slope}: {plus}\n    -{args.slope}: {minus}\n")
    verdict = f"match, sigma = {list(cmp.sigma)}" if cmp.match else "no match"
    out.write(f"  {verdict}\n")
    return EXIT_OK


def _print_verdict(v, out):
    pairs = ", ".join(f"+-{s}" for s in v.surviving_pairs) or "none"
    out.write(f"{v.name}: {v.variant} (surviving slopes: {pairs})\n")
    for g in v.gates:
        out.write(f"  [{'pass' if g.passed else 'FAIL'}] {g.name}: {g.detail}\n")
    if v.note:
        out.write(f"  note: {v.note}\n")


def cmd_check(args, out) -> int:
    c = _load_valid(args.file)
    v = check_knot(c)
    if args.json:
        out.write(report.dumps(report.verdict_record(v)))
    else:
        _print_verdict(v, out)
    return EXIT_OK


def cmd_batch(args, out) -> int:
    d = Path(args.dir)
    if not d.is_dir():
        raise FileNotFoundError(f"not a directory: {d}")
    f = batch_funnel(load_corpus(d))
    if args.json:
        out.write(report.dumps({
            "reports": [report.verdict_record(v) for v in f.verdicts],
            "funnel": report.funnel_record(f),
        }))
        return EXIT_OK
    for v in f.verdicts:
        pairs = ", ".join(f"+-{s}" for s in v.surviving_pairs)
        failed = ", ".join(v.failed_gates)
        extra = pairs or failed
        out.write(f"{v.name}: {v.variant}" + (f" [{extra}]" if extra else "") + "\n")
    rec = report.funnel_record(f)
    out.write("funnel:\n")
    for key in ("total", "pass_epsilon", "pass_genus", "pass_boyer_lines", "with_candidates"):
        out.write(f"  {key}: {rec[key]}\n")
    out.write(f"  hf_indistinguishable: {', '.join(rec['hf_indistinguishable']) or '-'}\n")
    out.write(f"  inconclusive: {', '.join(rec['inconclusive']) or '-'}\n")
    for e in f.errors:
        out.write(f"  error: {e.name}: {e.message}\n")
    return EXIT_OK


def cmd_lens(args, out) -> int:
    try:
        if args.i is None:
            values = list(d_table(args.p, args.q))
        else:
            values = [d_invariant(args.p, args.q, args.i)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        first = 0 if args.i is None else args.i
        out.write(report.dumps({
            "p": args.p, "q": args.q,
            "d": [{"i": first + k, "value": _frac(v)} for k, v in enumerate(values)],
        }))
    else:
        for v in values:
            out.write(_frac(v) + "\n")
    return EXIT_OK


def cmd_render(args, out) -> int:
    c = _load_valid(args.file)
    _inv, prof = _profile(c)
    svg = render_curves(prof, args.slope, title=c.name)
    Path(args.output).write_text(svg, encoding="utf-8")
    if args.json:
        out.write(report.dumps({"name": c.name, "output": str(args.output)}))
    else:
        out.write(f"wrote {args.output}\n")
    return EXIT_OK


def _slope_arg(text):
    try:
        return parse_slope(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the machine-readable report")
    ap = _Parser(prog="cosmetic", description="Cosmetic surgery obstructions from UV=0 knot Floer complexes",
                 parents=[common])
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check grading laws and d^2 = 0")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", parents=[common], help="tau, epsilon, genus, n_s, e_s^d, q*")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("surgery", parents=[common], help="graded HF of +-P/Q surgery per spin^c")
    p.add_argument("file")
    p.add_argument("--slope", type=_slope_arg, required=True, metavar="P/Q")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("check", parents=[common], help="run the obstruction pipeline")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("batch", parents=[common], help="pipeline over every *.cfk in a directory")
    p.add_argument("dir")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("lens", parents=[common], help="d-invariants of L(P,Q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("i", type=int, nargs="?")
    p.set_defaults(func=cmd_lens)

    p = sub.add_parser("render", parents=[common], help="SVG of the curve invariant")
    p.add_argument("file")
    p.add_argument("--slope", type=_slope_arg, default=None, metavar="P/Q")
    p.add_argument("-o", "--output", required=True, metavar="OUT.svg")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.json = getattr(args, "json", False)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (OSError, ComplexFormatError, UnsupportedProfile) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ComplexValidationError as exc:
        err.write(f"invalid complex: {exc}\n")
        return EXIT_INVALID
    except (InvariantViolation, DecompositionError) as exc:
        err.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
