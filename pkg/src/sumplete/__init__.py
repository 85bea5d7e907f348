"""Sumplete puzzle toolkit: verifier, exact solver, generators, and a
reduction from exact satisfiability to two-valued puzzles."""

from .core import (
    DimensionMismatch,
    InvariantError,
    Mask,
    ParseError,
    SumpleteError,
    SumpleteInstance,
    col_sums,
    is_two_valued,
    parse_instance,
    parse_mask,
    row_sums,
    serialize_instance,
    serialize_mask,
    verify,
)
from .generator import GenConfig, Rng, gen_puzzle, gen_xsat_planted, gen_xsat_regular, perturb_hint
from .reduction import assignment_to_mask, mask_to_assignment, reduce_xsat
from .solver import (
    SolveOutcome,
    SolverConfig,
    SolveStats,
    Status,
    brute_force,
    count_solutions,
    enumerate_solutions,
    row_candidates,
    solve,
)
from .xsat import (
    XsatInstance,
    brute_force_xsat,
    is_regular,
    parse_xsat,
    serialize_xsat,
    verify_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "GenConfig",
    "InvariantError",
    "Mask",
    "ParseError",
    "Rng",
    "SolveOutcome",
    "SolveStats",
    "SolverConfig",
    "Status",
    "SumpleteError",
    "SumpleteInstance",
    "XsatInstance",
    "assignment_to_mask",
    "brute_force",
    "brute_force_xsat",
    "col_sums",
    "count_solutions",
    "enumerate_solutions",
    "gen_puzzle",
    "gen_xsat_planted",
    "gen_xsat_regular",
    "is_regular",
    "is_two_valued",
    "mask_to_assignment",
    "parse_instance",
    "parse_mask",
    "parse_xsat",
    "perturb_hint",
    "reduce_xsat",
    "row_candidates",
    "row_sums",
    "serialize_instance",
    "serialize_mask",
    "serialize_xsat",
    "solve",
    "verify",
    "verify_assignment",
]
