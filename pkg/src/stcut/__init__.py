"""Approximate s-t max cut by log-barrier deterministic annealing."""

from .annealing import RunReport, SolverState, initial_point, line_search, round_solution, solve, solve_stage
from .barrier import (
    BarrierConfig,
    b_gradient,
    b_hessian_diag,
    b_value,
    f_gradient,
    f_value,
    h_gradient,
    h_value,
    initial_beta,
    jacobi_eigenvalues,
    min_eigenvalue,
)
from .direction import DirectionResult, d_component, direction, multiplier, residual, shifted_gradient
from .graph import CutSolution, Problem, cut_value, generate_random, read_problem, validate, write_problem
from .oracle import OracleResult, brute_force_cut

__version__ = "0.1.0"
