"""
Scalar special functions used by every closed-form expression.
"""

from .functions import (
    SeriesControl,
    gamma,
    reciprocal_gamma,
    mittag_leffler,
    gauss_sum,
    hyp2f1,
    hyp2f1_array,
)

__all__ = [
    "SeriesControl",
    "gamma",
    "reciprocal_gamma",
    "mittag_leffler",
    "gauss_sum",
    "hyp2f1",
    "hyp2f1_array",
]
