"""Gromov–Hausdorff distances between bounded metric spaces and simplexes.

A simplex here is a finite or infinite set where all pairwise distances
equal one value ``lambda``. For a finite space ``X`` and an ``m``-vertex
simplex, the doubled distance ``2 d_GH`` has a closed form driven by how
``X`` splits into ``m`` blocks; this package computes that value exactly,
derives two-sided bounds from partition characteristics, and checks both
against a brute-force search over correspondences.
"""

from .errors import (
    AsymmetricMatrixError,
    BadCardinalityError,
    BadParamsError,
    EmptyRelationError,
    EmptySetError,
    EnumerationTooLargeError,
    GhSimplexError,
    InvalidCharacteristicsError,
    MetricValidationError,
    NegativeDistanceError,
    NonFiniteEntryError,
    NonPositiveLambdaError,
    NonPositiveScaleError,
    NonZeroDiagonalError,
    ParseError,
    SizeThresholdExceededError,
    TriangleViolationError,
    ZeroOffDiagonalError,
    ZeroPointsError,
)
from .metric import FiniteMetricSpace, hausdorff, set_dist_inf, set_dist_sup, simplex, validate
from .matrixio import (
    characteristics_to_json,
    load_input,
    load_space,
    parse_characteristics_json,
    parse_matrix_csv,
    parse_matrix_json,
    save_space,
    space_to_csv,
    space_to_json,
)
from .partitions import (
    ALPHA_INF,
    Partition,
    alpha,
    beta,
    diam_of,
    enumerate_partitions,
    iter_rgs,
    lam_minus_alpha,
    partition_count,
)
from .correspondences import (
    Correspondence,
    DEFAULT_CORRESPONDENCE_CAP,
    dis_rd,
    distortion,
    enumerate_irreducible,
    gh_bruteforce,
    irreducible_count,
    min_distortion_naive,
    rd_correspondence,
)
from .simplex_distance import (
    CaseTag,
    Characteristics,
    DEFAULT_PARTITION_CAP,
    GhBound,
    SimplexGhResult,
    SweepRow,
    alpha_plus_via_mst,
    bounds_from_characteristics,
    characteristics,
    classify_case,
    gh_to_simplex,
    gh_to_simplex_detail,
    gh_to_simplex_half,
    max_abs_bound,
    mst,
    sup_abs_over_set,
    sup_max_over_set,
    sweep,
)
from .presets import PRESET_NAMES, get_preset
from .generate import circle_sample, generate_space, lp_points, random_metric
from .tolerance import DEFAULT_TOLERANCE, close, leq

__version__ = "0.1.0"

__all__ = [
    "ALPHA_INF",
    "AsymmetricMatrixError",
    "BadCardinalityError",
    "BadParamsError",
    "CaseTag",
    "Characteristics",
    "Correspondence",
    "DEFAULT_CORRESPONDENCE_CAP",
    "DEFAULT_PARTITION_CAP",
    "DEFAULT_TOLERANCE",
    "EmptyRelationError",
    "EmptySetError",
    "EnumerationTooLargeError",
    "FiniteMetricSpace",
    "GhBound",
    "GhSimplexError",
    "InvalidCharacteristicsError",
    "MetricValidationError",
    "NegativeDistanceError",
    "NonFiniteEntryError",
    "NonPositiveLambdaError",
    "NonPositiveScaleError",
    "NonZeroDiagonalError",
    "PRESET_NAMES",
    "ParseError",
    "Partition",
    "SimplexGhResult",
    "SizeThresholdExceededError",
    "SweepRow",
    "TriangleViolationError",
    "ZeroOffDiagonalError",
    "ZeroPointsError",
    "alpha",
    "alpha_plus_via_mst",
    "beta",
    "bounds_from_characteristics",
    "characteristics",
    "characteristics_to_json",
    "circle_sample",
    "classify_case",
    "close",
    "diam_of",
    "dis_rd",
    "distortion",
    "enumerate_irreducible",
    "enumerate_partitions",
    "generate_space",
    "get_preset",
    "gh_bruteforce",
    "gh_to_simplex",
    "gh_to_simplex_detail",
    "gh_to_simplex_half",
    "hausdorff",
    "irreducible_count",
    "iter_rgs",
    "lam_minus_alpha",
    "leq",
    "load_input",
    "load_space",
    "lp_points",
    "max_abs_bound",
    "min_distortion_naive",
    "mst",
    "parse_characteristics_json",
    "parse_matrix_csv",
    "parse_matrix_json",
    "partition_count",
    "random_metric",
    "rd_correspondence",
    "save_space",
    "set_dist_inf",
    "set_dist_sup",
    "simplex",
    "space_to_csv",
    "space_to_json",
    "sup_abs_over_set",
    "sup_max_over_set",
    "sweep",
    "validate",
]
