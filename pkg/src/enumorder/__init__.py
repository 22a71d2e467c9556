"""Finite-scale analysis of enumeration orders: uniformity, type-2
uniformity, Turing output binary search trees and a small listing generator."""

from .errors import (
    DuplicateValue,
    EnumOrderError,
    InvalidProgram,
    LengthMismatch,
    OutOfRange,
    ParseError,
    SetMismatch,
    StepGap,
    TooShort,
    ValueCollision,
)
from .listing import (
    FiniteSet,
    Listing,
    Monotonicity,
    OrderPattern,
    almost_equal,
    compose_transport,
    drop_prefix,
    is_monotonic,
    order_pattern,
    parse_finite_set,
    parse_listing,
    prepend,
    sorted_listing,
    symmetric_difference,
)
from .uniformity import (
    DiscordanceSet,
    Type2Witness,
    UniformityVerdict,
    VerdictKind,
    classify_corpus,
    discordant_pairs,
    sets_uniform_finite,
    type2_search,
    uniform_prefix,
)
from .tobst import (
    SpineKind,
    Tobst,
    TobstNode,
    TobstShape,
    export_dot,
    isomorphic_at_step,
    shape_encode,
    shape_sequence,
    spine_kind,
    tobst_at,
    tobst_build,
    tobst_insert,
    uniform_via_tobst,
)
from .enumerator import (
    EnumProgram,
    EnumRun,
    Instruction,
    dovetail_union,
    parse_program,
    program,
    run_budgeted,
)

__version__ = "0.1.0"
