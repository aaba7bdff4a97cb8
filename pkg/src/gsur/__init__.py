"""Balanced-range systems for bicolored point sets.

Interval, box, and ball constructions with certificates, a set-cover based
minimal-size solver, the hardness reduction from set cover, Gabriel-graph
machinery, and Monte Carlo experiments on random bicolorings.
"""
from .constructions import (
    ThresholdReport,
    ball_gsur,
    box_gsur,
    consecutive_interval_gsur,
    m_restricted_gsur,
    size2k_interval_gsur,
    threshold_report,
)
from .core import (
    BLUE,
    RED,
    Ball,
    Bicoloring,
    BicoloringFamily,
    Box,
    ColorCount,
    CoordInterval,
    GSur,
    IndexInterval,
    PointSet,
    Range,
    balance_count,
    build_certificate,
    contained_indices,
    contains,
    enumerate_candidate_intervals,
    gsur_failures,
    is_balanced,
    prefix_balance,
    verify_certificate,
)
from .errors import (
    BudgetExceeded,
    CertificateError,
    DimensionError,
    Disconnected,
    GsurError,
    InfeasibleRow,
    InvalidParams,
    MonochromaticInput,
    NonQualifyingBicoloring,
    NoSeparatingAxis,
    NotMRestricted,
)
from .gabriel import Graph, edge_list_text, gabriel_graph, is_connected, spanning_tree
from .instances import (
    NamedInstance,
    gen_2k_tightness,
    gen_embedded_line,
    gen_m_restricted_family,
    gen_prefix_family,
)
from .random_sim import (
    ContinuousTrial,
    DiscreteTrial,
    ExperimentResult,
    continuous_stats,
    prob_e_closed_form,
    prob_e_exact,
    prob_e_lower_bound,
    run_experiment,
    sample_continuous,
    sample_continuous_points,
    sample_discrete,
    smallest_largest_balanced,
)
from .solver import (
    CoverageMatrix,
    ReductionOutput,
    SetCoverInstance,
    build_coverage,
    exact_cover,
    extract_set_cover,
    greedy_cover,
    reduce_from_set_cover,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "Ball",
    "Bicoloring",
    "BicoloringFamily",
    "Box",
    "BudgetExceeded",
    "CertificateError",
    "ColorCount",
    "ContinuousTrial",
    "CoordInterval",
    "CoverageMatrix",
    "DimensionError",
    "Disconnected",
    "DiscreteTrial",
    "ExperimentResult",
    "GSur",
    "Graph",
    "GsurError",
    "IndexInterval",
    "InfeasibleRow",
    "InvalidParams",
    "MonochromaticInput",
    "NamedInstance",
    "NoSeparatingAxis",
    "NonQualifyingBicoloring",
    "NotMRestricted",
    "PointSet",
    "Range",
    "ReductionOutput",
    "SetCoverInstance",
    "ThresholdReport",
    "balance_count",
    "ball_gsur",
    "box_gsur",
    "build_certificate",
    "build_coverage",
    "consecutive_interval_gsur",
    "contained_indices",
    "contains",
    "continuous_stats",
    "edge_list_text",
    "enumerate_candidate_intervals",
    "exact_cover",
    "extract_set_cover",
    "gabriel_graph",
    "gen_2k_tightness",
    "gen_embedded_line",
    "gen_m_restricted_family",
    "gen_prefix_family",
    "greedy_cover",
    "gsur_failures",
    "is_balanced",
    "is_connected",
    "m_restricted_gsur",
    "prefix_balance",
    "prob_e_closed_form",
    "prob_e_exact",
    "prob_e_lower_bound",
    "reduce_from_set_cover",
    "run_experiment",
    "sample_continuous",
    "sample_continuous_points",
    "sample_discrete",
    "size2k_interval_gsur",
    "smallest_largest_balanced",
    "spanning_tree",
    "threshold_report",
    "verify_certificate",
]
