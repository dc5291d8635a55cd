"""Exact combinatorics of eventually periodic sets, slaloms and selective covers."""

from .compression import (
    Tag,
    TrichotomyVerdict,
    build_slalom,
    classify_trichotomy,
    compress_family,
    compress_set,
    frechet_after,
    is_slalom,
)
from .constructions import (
    BoundingReport,
    GuesserProgram,
    bounding_reduction,
    escape_function,
    filter_subbase_from_bound,
    first2n,
    gtilde,
    ij_from_guesser,
    maxfin_closure,
    recursive_slalom_stream,
    rothberger_guesser,
    splitter_from_slalom,
)
from .covers import (
    CoverSequence,
    CoverTrace,
    GluePartition,
    Mode,
    PickSchedule,
    SelectionVerdict,
    classify_cover,
    evaluate_selection,
    gamma_glueable,
    glue_cover,
    split_cover,
)
from .epsets import (
    EPSet,
    almost_subset,
    canonicalize,
    complement,
    enumeration,
    intersect,
    is_cofinite,
    member,
    tail_gap_bound,
    union,
)
from .errors import *  # noqa: F401,F403
from .families import (
    FamilySpec,
    TestBattery,
    base_for_roth_relative,
    dual_membership,
    gen_membership,
    is_filter_base,
    psi_k,
    reaping_relative,
    split_witness_check,
    subbase_check,
    ultra_relative,
)
from .qafuns import (
    QAFun,
    StrandFun,
    compose,
    eq_infinitely_often,
    image_set,
    le_set,
    le_star,
    pointwise_max,
)
from .streams import LazyFun, LazySet, Truncation, baire_to_roth, truncate
from .textio import parse, serialize

__version__ = "0.1.0"
