"""Chromatic persistence for weighted graphs.

Sweep a weighted simple graph's edges in increasing weight order and track
the diagonal E-polynomial of the graphic arrangement complement after every
insertion. Each event contributes a jump equal to the chromatic polynomial
of the contracted minor, and the jumps roll up into a truncated barcode
zeta. A union-find Betti baseline and a ring-size recognition benchmark are
included for comparison.
"""

from .baseline import PHRecord, PHSummary, PHTrace, run_ph_baseline, summarize
from .conversions import (
    BettiVector,
    DiagonalEPolynomial,
    betti_vector,
    chromatic_to_diagonal_e,
    chromatic_to_poincare,
    poincare_to_chromatic,
)
from .engines import (
    EngineChoice,
    MemoTable,
    chi_auto,
    chi_bruteforce_oracle,
    chi_closed_form,
    chi_deletion_contraction,
    chi_series_parallel,
    chi_treewidth_dp,
    chi_with_engine,
)
from .errors import (
    ConsistencyError,
    DuplicateWeightError,
    EdgeListParseError,
    EngineUnsupportedError,
    GraphInvariantError,
)
from .experiment import (
    EvalReport,
    FeatureVector,
    Instance,
    generate_dataset,
    loo_1nn,
    mcnemar,
    run_experiment,
    vectorize_baseline,
    vectorize_persistence,
)
from .formats import (
    parse_simple_edge_list,
    parse_weighted_edge_list,
    result_to_json,
    trace_to_csv,
    write_simple_edge_list,
    write_weighted_edge_list,
)
from .graphs import (
    SimpleGraph,
    ThresholdChain,
    ThresholdEvent,
    WeightedGraph,
    build_threshold_chain,
    components,
    contract_edge,
    cycle_rank,
    delete_edge,
)
from .pipeline import (
    BarcodeZeta,
    OracleReport,
    PersistenceResult,
    run_persistence,
    verify_against_oracle,
    zeta_update,
)
from .polynomials import FactoredChromatic, IntPolynomial, RationalPolynomial

__version__ = "0.1.0"

__all__ = [
    "BarcodeZeta",
    "BettiVector",
    "ConsistencyError",
    "DiagonalEPolynomial",
    "DuplicateWeightError",
    "EdgeListParseError",
    "EngineChoice",
    "EngineUnsupportedError",
    "EvalReport",
    "FactoredChromatic",
    "FeatureVector",
    "GraphInvariantError",
    "Instance",
    "IntPolynomial",
    "MemoTable",
    "OracleReport",
    "PersistenceResult",
    "PHRecord",
    "PHSummary",
    "PHTrace",
    "RationalPolynomial",
    "SimpleGraph",
    "ThresholdChain",
    "ThresholdEvent",
    "WeightedGraph",
    "betti_vector",
    "build_threshold_chain",
    "chi_auto",
    "chi_bruteforce_oracle",
    "chi_closed_form",
    "chi_deletion_contraction",
    "chi_series_parallel",
    "chi_treewidth_dp",
    "chi_with_engine",
    "chromatic_to_diagonal_e",
    "chromatic_to_poincare",
    "components",
    "contract_edge",
    "cycle_rank",
    "delete_edge",
    "generate_dataset",
    "loo_1nn",
    "mcnemar",
    "parse_simple_edge_list",
    "parse_weighted_edge_list",
    "poincare_to_chromatic",
    "result_to_json",
    "run_experiment",
    "run_persistence",
    "run_ph_baseline",
    "summarize",
    "trace_to_csv",
    "vectorize_baseline",
    "vectorize_persistence",
    "verify_against_oracle",
    "write_simple_edge_list",
    "write_weighted_edge_list",
    "zeta_update",
]
