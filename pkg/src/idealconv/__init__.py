"""Computable toolkit for convergence along ideals of small sets.

Symbolic set terms over two countable index universes, a catalog of
ideals with decidable membership, convergence and star-convergence
decision procedures, additive-property analysis, and exhaustive
finite-model oracles that cross-check the symbolic engine.
"""

from .errors import (
    AdmissibilityRequired,
    FamilyNotInIdeal,
    FinitePartition,
    IdealConvError,
    InconsistencyFound,
    InvalidFunction,
    NotContinuous,
    NotStarConvergent,
    PreconditionViolated,
    PreimageNotRepresentable,
    SampleNotInIdeal,
    SizeTooLarge,
    UniverseMismatch,
    UnsupportedCombination,
)
from .universe import Universe, canonical_rank, diag_index, diag_pair, elements_upto
from .terms import (
    ClassifyResult,
    SetTerm,
    block,
    classify,
    col,
    compl,
    diff,
    empty,
    finite_set,
    full,
    inter,
    member,
    nat_value,
    pair_grid,
    row,
    tail,
    truncate,
    union,
    upper_quad,
)
from .partitions import (
    COLUMNS,
    CORNER,
    RULER,
    Partition,
    block_contains,
    block_count_upto,
    block_of,
    bound_for_count,
    partition_by_id,
    residues,
)
from .bijections import (
    PAIRING,
    RULER_CORNER,
    Bijection,
    apply,
    bijection_by_name,
    invert,
    pair_decode,
    pair_encode,
    preimage_term,
)
from .ideals import (
    Ideal,
    Tri,
    admissible,
    admissible_on,
    equiv_mod,
    fin,
    has_maximum,
    improper,
    in_filter,
    in_ideal,
    known_subset,
    maximum_term,
    partition_ideal,
    partition_incidence,
    pointwise_product,
    prefix_unions_in_ideal,
    principal,
    pringsheim,
    proper,
    pushforward,
    quadrant_avoidance,
    subseteq_mod,
    trace_ideal,
    uniform_product,
)
from .spaces import (
    METRIC_LINE,
    ContinuousMap,
    FiniteTop,
    MetricLine,
    affine_map,
    as_fraction,
    discrete,
    finite_top,
    indiscrete,
    map_value,
    sierpinski,
    table_map,
)
from .functions import (
    Const,
    DiagonalFamily,
    PiecewiseFn,
    TailsTo,
    compose,
    constant_fn,
    evaluate,
    modify_on,
    piecewise,
    remainder_term,
    validate_fn,
)
from .convergence import (
    StarResult,
    Verdict,
    Witness,
    converges,
    decompose,
    diagonal_function,
    gap_example,
    limits,
    star_converges,
    verify_witness,
)
from .additivity import (
    ApStatus,
    ApVerdict,
    BlockFamilyWitness,
    additive_property,
    certify_failure_on_truncation,
    pi_condition_crosscheck,
    pi1_search,
    refute_partition_fin,
)
from .finite import (
    AgreementReport,
    CrosscheckReport,
    FiniteIdeal,
    FiniteSpace,
    SuiteReport,
    agreement_sweep,
    brute_ap,
    brute_i_limits,
    brute_ihj,
    brute_metric_ihj,
    brute_metric_limits,
    brute_pi_conditions,
    continuous_tables,
    crosscheck,
    encode_fn,
    encode_ideal,
    encode_space,
    enumerate_ideals,
    enumerate_topologies,
    lemma_suite,
)
from . import sampling, serialize

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityRequired",
    "AgreementReport",
    "ApStatus",
    "ApVerdict",
    "Bijection",
    "BlockFamilyWitness",
    "COLUMNS",
    "CORNER",
    "ClassifyResult",
    "Const",
    "ContinuousMap",
    "CrosscheckReport",
    "DiagonalFamily",
    "FamilyNotInIdeal",
    "FiniteIdeal",
    "FiniteSpace",
    "FiniteTop",
    "FinitePartition",
    "Ideal",
    "IdealConvError",
    "InconsistencyFound",
    "InvalidFunction",
    "METRIC_LINE",
    "MetricLine",
    "NotContinuous",
    "NotStarConvergent",
    "PAIRING",
    "Partition",
    "PiecewiseFn",
    "PreconditionViolated",
    "PreimageNotRepresentable",
    "RULER",
    "RULER_CORNER",
    "SampleNotInIdeal",
    "SetTerm",
    "SizeTooLarge",
    "StarResult",
    "SuiteReport",
    "TailsTo",
    "Tri",
    "Universe",
    "UniverseMismatch",
    "UnsupportedCombination",
    "Verdict",
    "Witness",
    "additive_property",
    "admissible",
    "admissible_on",
    "affine_map",
    "agreement_sweep",
    "apply",
    "as_fraction",
    "bijection_by_name",
    "block",
    "block_contains",
    "block_count_upto",
    "block_of",
    "bound_for_count",
    "brute_ap",
    "brute_i_limits",
    "brute_ihj",
    "brute_metric_ihj",
    "brute_metric_limits",
    "brute_pi_conditions",
    "canonical_rank",
    "certify_failure_on_truncation",
    "classify",
    "col",
    "compl",
    "compose",
    "constant_fn",
    "continuous_tables",
    "converges",
    "crosscheck",
    "decompose",
    "diag_index",
    "diag_pair",
    "diagonal_function",
    "diff",
    "discrete",
    "elements_upto",
    "empty",
    "encode_fn",
    "encode_ideal",
    "encode_space",
    "enumerate_ideals",
    "enumerate_topologies",
    "equiv_mod",
    "evaluate",
    "fin",
    "finite_set",
    "finite_top",
    "full",
    "gap_example",
    "has_maximum",
    "improper",
    "in_filter",
    "in_ideal",
    "indiscrete",
    "inter",
    "invert",
    "known_subset",
    "lemma_suite",
    "limits",
    "map_value",
    "maximum_term",
    "member",
    "modify_on",
    "nat_value",
    "pair_decode",
    "pair_encode",
    "pair_grid",
    "partition_by_id",
    "partition_ideal",
    "partition_incidence",
    "pi1_search",
    "pi_condition_crosscheck",
    "piecewise",
    "pointwise_product",
    "prefix_unions_in_ideal",
    "preimage_term",
    "principal",
    "pringsheim",
    "proper",
    "pushforward",
    "quadrant_avoidance",
    "refute_partition_fin",
    "remainder_term",
    "residues",
    "row",
    "sampling",
    "serialize",
    "sierpinski",
    "star_converges",
    "subseteq_mod",
    "tail",
    "table_map",
    "trace_ideal",
    "truncate",
    "uniform_product",
    "union",
    "upper_quad",
    "validate_fn",
    "verify_witness",
]
