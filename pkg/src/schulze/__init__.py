"""Schulze-rule winners and coalitional manipulation.

Library surface: election data and file formats, widest-path winner
computation, vote homogenization with the bounded weighted-manipulation
solver, the exact polynomial unweighted manipulation solvers, and
brute-force oracles for small instances.
"""

from .election import (
    Ballot,
    CandidateRegistry,
    PairwiseMatrix,
    Profile,
    WeightedMajorityGraph,
    build_wmg,
    mcgarvey_profile,
    pairwise_tally,
)
from .engine import (
    StrengthMatrix,
    WinningSet,
    format_strength_table,
    strength_matrix,
    winning_set,
)
from .errors import (
    CapacityError,
    InternalInvariantError,
    ParseError,
    SchulzeError,
    ValidationError,
)
from .fileformat import parse_election, serialize_election
from .homogenize import (
    ManipulationOrder,
    OutBranching,
    WcmOutcome,
    critical_out_branching,
    homogenize,
    homogenizing_order,
    solve_wcm_bounded,
)
from .oracle import (
    BruteOutcome,
    InstanceGenerator,
    brute_strengths,
    brute_ucm,
    brute_wcm,
    default_registry,
)
from .ucm import (
    BoundTable,
    RuleFiring,
    UcmOutcome,
    check_single_vote_necessary,
    construct_manipulation_order,
    preprocessing_bounds,
    resolvability_constraints,
    resolvability_vote,
    solve_ucm_cowinner,
    solve_ucm_unique,
)

__version__ = "0.1.0"

__all__ = [
    "Ballot",
    "BoundTable",
    "BruteOutcome",
    "CandidateRegistry",
    "CapacityError",
    "InstanceGenerator",
    "InternalInvariantError",
    "ManipulationOrder",
    "OutBranching",
    "PairwiseMatrix",
    "ParseError",
    "Profile",
    "RuleFiring",
    "SchulzeError",
    "StrengthMatrix",
    "UcmOutcome",
    "ValidationError",
    "WcmOutcome",
    "WeightedMajorityGraph",
    "WinningSet",
    "brute_strengths",
    "brute_ucm",
    "brute_wcm",
    "build_wmg",
    "check_single_vote_necessary",
    "construct_manipulation_order",
    "critical_out_branching",
    "default_registry",
    "format_strength_table",
    "homogenize",
    "homogenizing_order",
    "mcgarvey_profile",
    "pairwise_tally",
    "parse_election",
    "preprocessing_bounds",
    "resolvability_constraints",
    "resolvability_vote",
    "serialize_election",
    "solve_ucm_cowinner",
    "solve_ucm_unique",
    "solve_wcm_bounded",
    "strength_matrix",
    "winning_set",
]
