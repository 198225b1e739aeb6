"""
Closed-form solutions, cost functional and Euler-Lagrange checks for the
worked variational problem.
"""

from .types import Method, SolutionSpec, FunctionalValue
from .solutions import solve_classical, solve_crl, solve_cc, sample_solution
from .functional import (
    lagrangian,
    lagrangian_partials,
    evaluate_functional,
    el_residual_crl,
    el_residual_cc,
    el_residuals,
    convexity_certificate,
    richardson_limit,
    select_grid,
)

__all__ = [
    # Types
    "Method",
    "SolutionSpec",
    "FunctionalValue",
    # Solutions
    "solve_classical",
    "solve_crl",
    "solve_cc",
    "sample_solution",
    # Functional and checks
    "lagrangian",
    "lagrangian_partials",
    "evaluate_functional",
    "el_residual_crl",
    "el_residual_cc",
    "el_residuals",
    "convexity_certificate",
    "richardson_limit",
    "select_grid",
]
