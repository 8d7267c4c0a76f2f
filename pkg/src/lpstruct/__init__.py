"""Exact-arithmetic certificates for the structure of linear programs."""

from .exact import Matrix, columns_independent, null_space_basis, rank, solve_exact
from .lp import (
    Infeasible,
    LpProblem,
    Optimal,
    Separator,
    Unbounded,
    Weights,
    complementary_slackness_check,
    farkas_separate,
    solve,
)

__version__ = "0.1.0"
