"""
Fractional integral and derivative operators.

Analytic power and constant rules, the Caputo/Riemann-Liouville relation,
and the L1 numerical scheme on uniform grids.
"""

from .types import Order, Grid, SampledFunction
from .operators import (
    caputo_left_power,
    caputo_right_power,
    rl_left_power,
    rl_right_power,
    caputo_of_constant,
    rl_left_of_constant,
    rl_right_of_constant,
    caputo_rl_correction,
    l1_weights,
    caputo_left_l1,
    caputo_right_l1,
    caputo_left_l1_all,
    caputo_right_l1_all,
    rl_integral_num,
)

__all__ = [
    # Types
    "Order",
    "Grid",
    "SampledFunction",
    # Analytic rules
    "caputo_left_power",
    "caputo_right_power",
    "rl_left_power",
    "rl_right_power",
    "caputo_of_constant",
    "rl_left_of_constant",
    "rl_right_of_constant",
    "caputo_rl_correction",
    # Numerical operators
    "l1_weights",
    "caputo_left_l1",
    "caputo_right_l1",
    "caputo_left_l1_all",
    "caputo_right_l1_all",
    "rl_integral_num",
]
