"""Exact-arithmetic cohomology of twisted forms on G/P with maximal parabolic P,
plus effective infinitesimal-Torelli and Kuranishi arithmetic for cyclic covers.
"""

from ._kernels import BACKEND
from .bott import (
    CohomologyTable,
    CohomologyVector,
    WeightVerdict,
    classify_weight,
    cohomology_table,
    hodge_diamond,
    line_bundle_cohomology,
    twisted_forms_cohomology,
    vanishing_shortcut,
)
from .errors import (
    CalcError,
    CapExceeded,
    DimensionMismatch,
    DimensionTooSmall,
    IndexOutOfRange,
    InvalidCover,
    InvalidRank,
    NotARoot,
    NotInSpan,
    NotProportional,
)
from .parabolic import ParabolicData, build_parabolic, parabolic_json, torelli_constants
from .root_system import LieType, RootSystem, Vec, build_root_system, root_system_json
from .torelli import (
    CoverInvariants,
    CoverSpec,
    KuranishiReport,
    TorelliReport,
    check_torelli,
    cover_invariants,
    kuranishi,
)
from .weyl import (
    DEFAULT_CAP,
    GradedCosetReps,
    WeylElement,
    coset_count,
    enumerate_coset_reps,
    from_word,
    identity,
    length,
    levi_components,
    levi_weyl_order,
    simple_reflection,
    weyl_order,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CalcError",
    "CapExceeded",
    "CohomologyTable",
    "CohomologyVector",
    "CoverInvariants",
    "CoverSpec",
    "DEFAULT_CAP",
    "DimensionMismatch",
    "DimensionTooSmall",
    "GradedCosetReps",
    "IndexOutOfRange",
    "InvalidCover",
    "InvalidRank",
    "KuranishiReport",
    "LieType",
    "NotARoot",
    "NotInSpan",
    "NotProportional",
    "ParabolicData",
    "RootSystem",
    "TorelliReport",
    "Vec",
    "WeightVerdict",
    "WeylElement",
    "build_parabolic",
    "build_root_system",
    "check_torelli",
    "classify_weight",
    "cohomology_table",
    "coset_count",
    "cover_invariants",
    "enumerate_coset_reps",
    "from_word",
    "hodge_diamond",
    "identity",
    "kuranishi",
    "length",
    "levi_components",
    "levi_weyl_order",
    "line_bundle_cohomology",
    "parabolic_json",
    "root_system_json",
    "simple_reflection",
    "torelli_constants",
    "twisted_forms_cohomology",
    "vanishing_shortcut",
    "weyl_order",
]
