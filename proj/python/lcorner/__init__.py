"""Tikhonov regularization with automatic penalty selection.

The heavy lifting lives in the compiled extension; this package re-exports
its public names. The selected penalty weight is the L-curve corner, located
by a curvature-guided golden-section search.
"""

from ._core import (
    GOLDEN_RATIO,
    BatteryConfig,
    CornerResult,
    CornerSearchConfig,
    CurvatureSample,
    DenseCornerResult,
    Error,
    IterationRecord,
    LCurvePoint,
    ParameterScale,
    RegularizedProblem,
    SearchBranch,
    SmoothingProblem,
    TestProblem,
    TikhonovSolution,
    add_noise,
    build_problem,
    corner_search,
    corner_search_with_provider,
    default_battery,
    dense_corner_oracle,
    golden_section_init,
    make_smoothing_problem,
    make_test_problem,
    menger_curvature,
    serialize_trace,
    tikhonov_solve,
)

__all__ = [
    "GOLDEN_RATIO",
    "BatteryConfig",
    "CornerResult",
    "CornerSearchConfig",
    "CurvatureSample",
    "DenseCornerResult",
    "Error",
    "IterationRecord",
    "LCurvePoint",
    "ParameterScale",
    "RegularizedProblem",
    "SearchBranch",
    "SmoothingProblem",
    "TestProblem",
    "TikhonovSolution",
    "add_noise",
    "build_problem",
    "corner_search",
    "corner_search_with_provider",
    "default_battery",
    "dense_corner_oracle",
    "golden_section_init",
    "make_smoothing_problem",
    "make_test_problem",
    "menger_curvature",
    "serialize_trace",
    "tikhonov_solve",
]

__version__ = "0.1.0"
