"""
Closed-form solutions of the worked example

    minimize J(y) = int_0^1 (D^alpha y)^2 - 24 y dx,   y(0) = y(1) = 0,

for the classical problem and for both fractional Euler-Lagrange equations.
With P = 1 / Gamma(1+alpha)^2:

    classical  y(x) = -6x^2 + 6x
    C-RL       y(x) = P x^alpha [12 F(1,-a,1+a; x) - 6 F(1,1-a,1+a; x) / F(1,1-a,1+a; 1)]
    C-C        y(x) = P x^alpha [12 F(1,-a,1+a; x) - 6]

where F is the Gauss hypergeometric function and a = alpha.
"""

import logging
from typing import Optional

import numpy as np

from src.errors import DomainError, SolutionNotExistError
from src.config.settings import settings
from src.fracops.types import Grid, Order, SampledFunction
from src.specfun import SeriesControl, gamma, hyp2f1, hyp2f1_array
from src.varsolve.types import Method, SolutionSpec

logger = logging.getLogger(__name__)


def _check_unit_interval(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"solutions are defined on [0, 1], got x = {x}")


def _prefactor(alpha: float) -> float:
    return 1.0 / gamma(1.0 + alpha) ** 2


def solve_classical(x: float) -> float:
    """
    Solution of y'' = -12 with y(0) = y(1) = 0.

    Example:
        >>> solve_classical(0.5)
        1.5
    """
    _check_unit_interval(x)
    return -6.0 * x * x + 6.0 * x


def _crl_profile(alpha: float, xs: np.ndarray, ctl: SeriesControl) -> np.ndarray:
    if alpha <= settings.crl_order_threshold:
        raise SolutionNotExistError(alpha)
    normalizer = hyp2f1(1.0, 1.0 - alpha, 1.0 + alpha, 1.0, ctl)
    first = hyp2f1_array(1.0, -alpha, 1.0 + alpha, xs, ctl)
    second = hyp2f1_array(1.0, 1.0 - alpha, 1.0 + alpha, xs, ctl)
    return _prefactor(alpha) * xs ** alpha * (12.0 * first - 6.0 * second / normalizer)


def _cc_profile(alpha: float, xs: np.ndarray, ctl: SeriesControl) -> np.ndarray:
    first = hyp2f1_array(1.0, -alpha, 1.0 + alpha, xs, ctl)
    return _prefactor(alpha) * xs ** alpha * (12.0 * first - 6.0)


def solve_crl(ord: Order, x: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    Solution of the Caputo / Riemann-Liouville Euler-Lagrange equation.

    Args:
        ord: Fractional order, alpha > 0.5
        x: Point in [0, 1]
        ctl: Series truncation policy

    Returns:
        y_RL(x)

    Raises:
        SolutionNotExistError: alpha <= 0.5, where F(1, 1-a, 1+a; 1) diverges
        DomainError: x outside [0, 1]
    """
    _check_unit_interval(x)
    ctl = ctl or SeriesControl()
    return float(_crl_profile(ord.alpha, np.array([x]), ctl)[0])


def solve_cc(ord: Order, x: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    Solution of the Caputo / Caputo Euler-Lagrange equation, valid for 0 < alpha <= 1.

    Raises:
        DomainError: x outside [0, 1]
    """
    _check_unit_interval(x)
    ctl = ctl or SeriesControl()
    return float(_cc_profile(ord.alpha, np.array([x]), ctl)[0])


def sample_solution(
    spec: SolutionSpec,
    grid: Grid,
    ctl: Optional[SeriesControl] = None
) -> SampledFunction:
    """
    Sample a closed-form solution on every node of a grid over [0, 1].

    Args:
        spec: Which solution at which order
        grid: Grid with a = 0 and b = 1
        ctl: Series truncation policy

    Returns:
        SampledFunction of the solution
    """
    if grid.a != 0.0 or grid.b != 1.0:
        raise DomainError(f"solutions live on [0, 1], got grid [{grid.a}, {grid.b}]")
    ctl = ctl or SeriesControl()
    xs = grid.nodes()

    if spec.kind is Method.CLASSICAL:
        values = -6.0 * xs * xs + 6.0 * xs
    elif spec.kind is Method.CRL:
        values = _crl_profile(spec.ord.alpha, xs, ctl)
    else:
        values = _cc_profile(spec.ord.alpha, xs, ctl)

    logger.debug("sampled %s solution at alpha=%g on %d steps", spec.kind.value, spec.ord.alpha, grid.m)
    return SampledFunction(grid=grid, values=values)
