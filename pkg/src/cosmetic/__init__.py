"""Exact obstructions to truly cosmetic surgeries from UV = 0 knot Floer complexes."""

from .cfk import (
    Arrow,
    Generator,
    UVZeroComplex,
    Violation,
    load_complex,
    parse_complex,
    serialize_complex,
    validate,
)
from .curves import CurveProfile, candidate_q, curve_profile, hook_homology_rank
from .errors import (
    ComplexFormatError,
    ComplexValidationError,
    CosmeticError,
    DecompositionError,
    InvariantViolation,
    UnsupportedProfile,
)
from .lens import d_invariant, d_sum, d_table, first_q_sum, hj_expansion
from .pipeline import (
    Gate,
    Verdict,
    batch_funnel,
    check_knot,
    synthesize_box_complex,
    synthesize_unobstructed,
)
from .reduction import Decomposition, KnotInvariants, Summand, analyze, decompose, knot_invariants, reduce
from .surgery import (
    GradedSurgeryComparison,
    SlopePair,
    graded_surgery,
    spin_c_crossings,
    total_rank,
    triangle_count,
)

__version__ = "0.1.0"
