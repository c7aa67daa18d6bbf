"""Exact success probabilities for catalyst-assisted entanglement concentration.

Converts N copies of a two-qubit pure state into Bell pairs under local
operations and classical communication, with and without a borrowed
catalyst state, using exact entanglement-monotone arithmetic on
compressed Schmidt spectra.
"""

from .catalysis_closed_form import (
    Branch,
    CatalystResult,
    ConcentrationInstance,
    RatioProfile,
    boost_sweep,
    catalyzed_probability,
    final_monotones,
    initial_monotones,
    lqcc_probability,
    optimal_catalyst,
    ratio_profile,
)
from .catalyst_search import (
    RankKCatalyst,
    SearchConfig,
    evaluate_catalyst,
    grid_search_rank2,
    simplex_search_rank_k,
)
from .errors import (
    BadArity,
    CatalysisError,
    DeterministicRegime,
    DomainError,
    EmptyInput,
    NegativeEntry,
    NotNormalized,
    OddCopies,
)
from .schmidt_core import (
    SchmidtSpectrum,
    TransformPair,
    bell_spectrum,
    binary_entropy,
    majorizes,
    make_spectrum,
    monotone_E,
    n_copy_spectrum,
    remains_incommensurate,
    tensor,
    vidal_probability,
)
from .strategy_planner import (
    PairwiseOutcome,
    PartitionPlan,
    StrategyReport,
    best_partition,
    compare_strategies,
    pairwise_distribution,
)
from .verification import SuiteResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BadArity",
    "Branch",
    "CatalysisError",
    "CatalystResult",
    "ConcentrationInstance",
    "DeterministicRegime",
    "DomainError",
    "EmptyInput",
    "NegativeEntry",
    "NotNormalized",
    "OddCopies",
    "PairwiseOutcome",
    "PartitionPlan",
    "RankKCatalyst",
    "RatioProfile",
    "SchmidtSpectrum",
    "SearchConfig",
    "StrategyReport",
    "SuiteResult",
    "TransformPair",
    "bell_spectrum",
    "best_partition",
    "binary_entropy",
    "boost_sweep",
    "catalyzed_probability",
    "compare_strategies",
    "evaluate_catalyst",
    "final_monotones",
    "grid_search_rank2",
    "initial_monotones",
    "lqcc_probability",
    "majorizes",
    "make_spectrum",
    "monotone_E",
    "n_copy_spectrum",
    "optimal_catalyst",
    "pairwise_distribution",
    "ratio_profile",
    "remains_incommensurate",
    "run_all",
    "simplex_search_rank_k",
    "tensor",
    "vidal_probability",
    "__version__",
]
