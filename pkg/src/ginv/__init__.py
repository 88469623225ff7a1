"""Generalized inverses of complex square matrices of arbitrary index.

The package computes the weak group inverse and its seven relatives
(Moore-Penrose, group, Drazin, core, core-EP, DMP, B-T), the decompositions
they rest on (Hartwig-Spindelboeck, core-nilpotent, core-EP), and decision
procedures for seven matrix orders, with every result checked against its
defining equations.
"""

from .decomp import (
    CNParts,
    CoreEPParts,
    HSParts,
    IndexResult,
    core_ep_decompose,
    core_nilpotent_decompose,
    hs_decompose,
    index,
)
from .errors import (
    ConvergenceError,
    DefiningEquationViolationError,
    GinvError,
    IllConditionedError,
    InconsistentSystemError,
    InfeasibleSpecError,
    MatrixParseError,
    NotGroupInvertibleError,
    ShapeMismatchError,
)
from .geninv import (
    InverseResult,
    WGRoute,
    bt_inverse,
    core_ep_inverse,
    core_inverse,
    dmp_inverse,
    drazin_inverse,
    group_inverse,
    mp_inverse,
    projector_onto_range,
    verify_wg,
    wg_inverse,
)
from .matcore import (
    DEFAULT_TOL,
    SchurResult,
    SVDResult,
    ToleranceConfig,
    approx_eq,
    as_matrix,
    frobenius_norm,
    rank,
    residual,
    schur_ordered,
    svd,
)
from .matfile import format_matrix, load_matrix, parse_matrix, save_matrix
from .oracle import (
    GenSpec,
    SuiteFailure,
    SuiteReport,
    SUITE_NAMES,
    brute_force_wg,
    gen_matrix,
    run_suite,
)
from .orders import (
    OrderVerdict,
    WGPairSpec,
    ce_order,
    cn_order,
    core_ep_order,
    core_ep_order_via_wg,
    drazin_order,
    make_ce_pair,
    make_wg_pair,
    minus_order,
    sharp_order,
    wg_order,
)

__version__ = "0.1.0"

__all__ = [
    "CNParts",
    "ConvergenceError",
    "CoreEPParts",
    "DEFAULT_TOL",
    "DefiningEquationViolationError",
    "GenSpec",
    "GinvError",
    "HSParts",
    "IllConditionedError",
    "InconsistentSystemError",
    "IndexResult",
    "InfeasibleSpecError",
    "InverseResult",
    "MatrixParseError",
    "NotGroupInvertibleError",
    "OrderVerdict",
    "SchurResult",
    "ShapeMismatchError",
    "SuiteFailure",
    "SuiteReport",
    "SUITE_NAMES",
    "SVDResult",
    "ToleranceConfig",
    "WGPairSpec",
    "WGRoute",
    "approx_eq",
    "as_matrix",
    "brute_force_wg",
    "bt_inverse",
    "ce_order",
    "cn_order",
    "core_ep_decompose",
    "core_ep_inverse",
    "core_ep_order",
    "core_ep_order_via_wg",
    "core_inverse",
    "core_nilpotent_decompose",
    "dmp_inverse",
    "drazin_inverse",
    "drazin_order",
    "format_matrix",
    "frobenius_norm",
    "gen_matrix",
    "group_inverse",
    "hs_decompose",
    "index",
    "load_matrix",
    "make_ce_pair",
    "make_wg_pair",
    "minus_order",
    "mp_inverse",
    "parse_matrix",
    "projector_onto_range",
    "rank",
    "residual",
    "run_suite",
    "save_matrix",
    "schur_ordered",
    "sharp_order",
    "svd",
    "verify_wg",
    "wg_inverse",
    "wg_order",
]
