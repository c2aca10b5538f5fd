"""Exact outer-derivation and solubility analysis for finite posets.

The package decides, over exact arithmetic, whether the incidence
algebra of a finite poset admits outer derivations for a given
coefficient ring, classifies the poset as soluble, defective or
inconclusive through the torsion of its first order-complex homology,
and evaluates combinatorial sufficient conditions.
"""

from .errors import (
    CycleError,
    DimensionError,
    DuplicateError,
    InputError,
    NotComparableError,
    NotReducedError,
    PathLimitExceeded,
    PosetderivError,
    SizeLimitError,
    UnknownElementError,
    UnknownFixtureError,
    UnsupportedRingError,
)
from .poset import (
    Crown,
    Poset,
    Relation,
    ShapeStats,
    beat_points,
    canonical_form,
    core,
    find_crowns,
    from_covers,
    join_meet,
    leq,
    shape_stats,
    transitive_reduction,
)
from .linalg import (
    INTEGERS,
    RATIONALS,
    IntegerMatrix,
    Ring,
    SmithDecomposition,
    kernel_basis,
    mod_ring,
    prime_field,
    rank_from_divisors,
    rank_over,
    ring_from_string,
    smith_normal_form,
    solve_linear,
)
from .homology import (
    ConclusiveVerdict,
    HomologySummary,
    OrderComplex,
    boundary_matrix,
    classify,
    euler_characteristic,
    full_order_complex,
    homology,
    order_complex,
)
from .derivations import (
    DEFAULT_PATH_LIMIT,
    ConsistencyMatrix,
    CycleWalk,
    ParallelPair,
    TransitiveFunction,
    circulation,
    consistency_matrix,
    der_pot_dims,
    from_cover_values,
    has_outer_derivation,
    is_potential,
    outer_witness,
    parallel_pairs,
)
from .criteria import (
    Co18Result,
    CriteriaReport,
    CrownReport,
    co18_bound,
    co18_threshold,
    criteria_report,
    crown_obstruction_report,
    crowns_without_bounds,
    size_bound_check,
    table2_conflict,
    table2_lookup,
)
from .survey import SweepReport, enumerate_posets, sweep
from .report import analysis_report, canonical_sha256, poset_from_json

__version__ = "0.1.0"

__all__ = [
    "CycleError",
    "DimensionError",
    "DuplicateError",
    "InputError",
    "NotComparableError",
    "NotReducedError",
    "PathLimitExceeded",
    "PosetderivError",
    "SizeLimitError",
    "UnknownElementError",
    "UnknownFixtureError",
    "UnsupportedRingError",
    "Crown",
    "Poset",
    "Relation",
    "ShapeStats",
    "beat_points",
    "canonical_form",
    "core",
    "find_crowns",
    "from_covers",
    "join_meet",
    "leq",
    "shape_stats",
    "transitive_reduction",
    "INTEGERS",
    "RATIONALS",
    "IntegerMatrix",
    "Ring",
    "SmithDecomposition",
    "kernel_basis",
    "mod_ring",
    "prime_field",
    "rank_from_divisors",
    "rank_over",
    "ring_from_string",
    "smith_normal_form",
    "solve_linear",
    "ConclusiveVerdict",
    "HomologySummary",
    "OrderComplex",
    "boundary_matrix",
    "classify",
    "euler_characteristic",
    "full_order_complex",
    "homology",
    "order_complex",
    "DEFAULT_PATH_LIMIT",
    "ConsistencyMatrix",
    "CycleWalk",
    "ParallelPair",
    "TransitiveFunction",
    "circulation",
    "consistency_matrix",
    "der_pot_dims",
    "from_cover_values",
    "has_outer_derivation",
    "is_potential",
    "outer_witness",
    "parallel_pairs",
    "Co18Result",
    "CriteriaReport",
    "CrownReport",
    "co18_bound",
    "co18_threshold",
    "criteria_report",
    "crown_obstruction_report",
    "crowns_without_bounds",
    "size_bound_check",
    "table2_conflict",
    "table2_lookup",
    "SweepReport",
    "enumerate_posets",
    "sweep",
    "analysis_report",
    "canonical_sha256",
    "poset_from_json",
]
