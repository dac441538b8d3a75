"""Dynamical and cyclic frames in finite-dimensional complex spaces.

Construction, classification and transformation of frames generated by
operator orbits, including canonical tight and equiangular frames and
erasure-error analysis.
"""

__version__ = "0.1.0"

from .cyclic import (
    CyclicReport,
    NormBoundReport,
    circulant_frame,
    conjugation_check,
    cyclicity_verdict,
    diagnose,
    eigenvalue_order_lcm,
    is_cyclic,
    kernel_shift_test,
    minimal_period,
    norm_bound_check,
    roots_frame,
    simplex_frame,
)
from .dynamical import (
    DynamicalSystem,
    WindowReport,
    detect_dynamical,
    dynamical_dual,
    extend_operator,
    orbit,
    window_report,
)
from .erasure import (
    ErasureRecord,
    ErasureReport,
    canonical_tight_cyclic,
    equiangularity_criterion,
    erasure_analysis,
    reconstruct_after_erasure,
    rotation_alignment,
    simplex_etf,
    worst_case_csv,
)
from .errors import (
    DependentVectorsError,
    FrameError,
    NoConvergenceError,
    NonHermitianError,
    NotAFrameError,
    NotCyclicError,
    NotPositiveDefiniteError,
    RepeatedRootError,
    SingularConjugatorError,
    SupportSizeError,
    SurvivorNotAFrameError,
    ZeroCoordinateError,
)
from .frames import (
    AnalysisReport,
    Frame,
    FrameBounds,
    canonical_dual,
    canonical_tight,
    classify,
    frame_bounds,
    frame_operator,
    gram_matrix,
    require_frame,
)
from .linalg import (
    DEFAULT_TOL,
    SpectralDecomposition,
    circulant,
    dft,
    hermitian_eig,
    idft,
    numerical_rank,
    operator_norm,
    orthogonal_complement,
    right_shift,
    spectral_function,
    subspace_distance,
)

__all__ = [
    "__version__",
    "DEFAULT_TOL",
    # linalg
    "SpectralDecomposition",
    "hermitian_eig",
    "spectral_function",
    "dft",
    "idft",
    "circulant",
    "right_shift",
    "orthogonal_complement",
    "operator_norm",
    "numerical_rank",
    "subspace_distance",
    # frames
    "Frame",
    "FrameBounds",
    "AnalysisReport",
    "frame_operator",
    "gram_matrix",
    "frame_bounds",
    "require_frame",
    "canonical_dual",
    "canonical_tight",
    "classify",
    # dynamical
    "DynamicalSystem",
    "WindowReport",
    "extend_operator",
    "orbit",
    "detect_dynamical",
    "window_report",
    "dynamical_dual",
    # cyclic
    "CyclicReport",
    "NormBoundReport",
    "is_cyclic",
    "minimal_period",
    "eigenvalue_order_lcm",
    "simplex_frame",
    "roots_frame",
    "diagnose",
    "kernel_shift_test",
    "circulant_frame",
    "norm_bound_check",
    "conjugation_check",
    "cyclicity_verdict",
    # erasure
    "ErasureRecord",
    "ErasureReport",
    "canonical_tight_cyclic",
    "equiangularity_criterion",
    "simplex_etf",
    "erasure_analysis",
    "worst_case_csv",
    "reconstruct_after_erasure",
    "rotation_alignment",
    # errors
    "FrameError",
    "NonHermitianError",
    "NoConvergenceError",
    "NotPositiveDefiniteError",
    "DependentVectorsError",
    "NotAFrameError",
    "NotCyclicError",
    "RepeatedRootError",
    "ZeroCoordinateError",
    "SingularConjugatorError",
    "SupportSizeError",
    "SurvivorNotAFrameError",
]
