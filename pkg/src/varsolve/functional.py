"""
Discretized cost functional, Euler-Lagrange residuals and the convexity check.

The functional is a right-endpoint Riemann sum of L(x, y, D^alpha y) with the
Caputo derivative taken by the L1 scheme. Residuals compose the left L1
derivative with a right operator:

    C-RL   RL_right(g) - 12, RL_right realized as right L1 plus the
           g(1) / Gamma(1-alpha) (1-x)^(-alpha) correction
    C-C    Caputo_right(g) - 12

where g is the left L1 derivative of the samples.
"""

import logging
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import settings
from src.errors import BoundaryConditionError, DomainError, GridTooCoarseError, IndexRangeError
from src.fracops.operators import (
    caputo_left_l1_all,
    caputo_right_l1,
    caputo_right_l1_all,
    caputo_rl_correction,
)
from src.fracops.types import Order, SampledFunction
from src.specfun import reciprocal_gamma
from src.varsolve.types import FunctionalValue, Method

logger = logging.getLogger(__name__)

Lagrangian = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]

# Right-hand side of both fractional Euler-Lagrange equations for L = u^2 - 24y
EL_RHS = 12.0


def lagrangian(x, y, u):
    """L(x, y, u) = u^2 - 24 y."""
    return u * u - 24.0 * y


def lagrangian_partials(x, y, u) -> Tuple:
    """(L_y, L_u) = (-24, 2u)."""
    return -24.0 * np.ones_like(np.asarray(y, dtype=float)), 2.0 * u


def _check_problem_samples(y: SampledFunction) -> None:
    grid = y.grid
    if grid.a != 0.0 or grid.b != 1.0:
        raise DomainError(f"the functional is posed on [0, 1], got [{grid.a}, {grid.b}]")
    if grid.m < 2:
        raise GridTooCoarseError(f"functional evaluation needs m >= 2, got {grid.m}")
    tol = settings.boundary_tolerance
    if abs(y.values[0]) > tol or abs(y.values[-1]) > tol:
        raise BoundaryConditionError(
            f"y(0) = {y.values[0]:.3e}, y(1) = {y.values[-1]:.3e} violate the "
            f"boundary conditions (tolerance {tol:g})"
        )


def evaluate_functional(
    y: SampledFunction,
    ord: Order,
    method: Method = Method.CC,
    lagrangian_fn: Optional[Lagrangian] = None
) -> FunctionalValue:
    """
    Riemann-sum value of J(y) = int_0^1 L(x, y, D^alpha y) dx.

    Args:
        y: Samples on a grid over [0, 1] with y(0) = y(1) = 0
        ord: Order of the Caputo derivative inside the Lagrangian
        method: Label recorded on the result
        lagrangian_fn: Vectorized L(x, y, u); defaults to u^2 - 24 y

    Returns:
        FunctionalValue with J = h sum_{i=1}^{m} L(x_i, y_i, L1_i)

    Raises:
        BoundaryConditionError: |y(0)| or |y(1)| above settings.boundary_tolerance
        GridTooCoarseError: m < 2

    Example:
        >>> from src.fracops.types import Grid
        >>> zero = SampledFunction.from_callable(Grid.unit(10), lambda x: 0.0)
        >>> evaluate_functional(zero, Order(alpha=0.5)).J
        0.0
    """
    _check_problem_samples(y)
    fn = lagrangian_fn or lagrangian
    g = caputo_left_l1_all(y, ord)
    nodes = y.grid.nodes()
    integrand = np.asarray(fn(nodes[1:], y.values[1:], g[1:]), dtype=float)
    J = float(y.grid.h * integrand.sum())
    logger.debug("J = %.6f (alpha=%g, m=%d, %s)", J, ord.alpha, y.grid.m, Method(method).value)
    return FunctionalValue(J=J, m=y.grid.m, method=method)


def _first_derivative(y: SampledFunction, ord: Order) -> SampledFunction:
    # Node 0 never enters a right-sided sum evaluated at i >= 1
    return SampledFunction(grid=y.grid, values=caputo_left_l1_all(y, ord))


def _check_interior(y: SampledFunction, i: int) -> None:
    if not 1 <= i <= y.grid.m - 1:
        raise IndexRangeError(f"residual node {i} outside [1, {y.grid.m - 1}]")


def el_residual_crl(y: SampledFunction, ord: Order, i: int) -> float:
    """
    Residual of RL_right(Caputo_left y) = 12 at interior node i.

    Raises:
        IndexRangeError: i outside [1, m - 1]
    """
    _check_interior(y, i)
    g = _first_derivative(y, ord)
    distance = y.grid.b - y.grid.node(i)
    right_rl = caputo_right_l1(g, ord, i) + caputo_rl_correction(g.values[-1], ord, distance)
    return right_rl - EL_RHS


def el_residual_cc(y: SampledFunction, ord: Order, i: int) -> float:
    """
    Residual of Caputo_right(Caputo_left y) = 12 at interior node i.

    Raises:
        IndexRangeError: i outside [1, m - 1]
    """
    _check_interior(y, i)
    g = _first_derivative(y, ord)
    return caputo_right_l1(g, ord, i) - EL_RHS


def el_residuals(y: SampledFunction, ord: Order, method: Method) -> np.ndarray:
    """
    Residuals at every interior node 1 .. m-1 in one pass.

    Entry k corresponds to node k + 1 and equals el_residual_crl or
    el_residual_cc there up to rounding.
    """
    method = Method(method)
    if method is Method.CLASSICAL:
        raise DomainError("residuals are defined for the fractional equations only")
    g = _first_derivative(y, ord)
    right = caputo_right_l1_all(g, ord)[1:-1]
    if method is Method.CRL:
        distances = y.grid.b - y.grid.nodes()[1:-1]
        right = right + g.values[-1] * reciprocal_gamma(1.0 - ord.alpha) * distances ** (-ord.alpha)
    return right - EL_RHS


def convexity_certificate(
    samples: Iterable[Sequence[float]],
    rtol: float = 1e-12
) -> bool:
    """
    Check the subgradient inequality of L(x, y, u) = u^2 - 24 y.

    For each quadruple (y, u, y1, u1) tests
    L(y + y1, u + u1) - L(y, u) >= L_y y1 + L_u u1, up to rounding.

    Args:
        samples: Quadruples (y, u, y1, u1)
        rtol: Rounding slack relative to the magnitudes involved

    Returns:
        True iff every quadruple satisfies the inequality

    Example:
        >>> convexity_certificate([(0.0, 0.0, 1.0, 1.0)])
        True
    """
    data = np.asarray(list(samples), dtype=float).reshape(-1, 4)
    if data.size == 0:
        return True
    y, u, y1, u1 = data.T
    gap = lagrangian(0.0, y + y1, u + u1) - lagrangian(0.0, y, u)
    l_y, l_u = lagrangian_partials(0.0, y, u)
    linear = l_y * y1 + l_u * u1
    scale = np.maximum(1.0, np.abs(u + u1) ** 2 + np.abs(u) ** 2 + 24.0 * (np.abs(y) + np.abs(y1)))
    return bool(np.all(gap - linear >= -rtol * scale))


def richardson_limit(j_coarse: float, j_fine: float, ratio: float = 2.0, rate: float = 1.0) -> float:
    """Extrapolate J(h) = J + C h^rate from grids whose step ratio is `ratio`."""
    return j_fine + (j_fine - j_coarse) / (ratio ** rate - 1.0)


def select_grid(values_by_m: Dict[int, Sequence[Optional[float]]], targets: Sequence[Optional[float]]) -> int:
    """
    Pick the grid size whose values sit closest to reference targets.

    Args:
        values_by_m: Grid size -> one value per column (None where absent)
        targets: Reference value per column (None where absent)

    Returns:
        The grid size minimizing the summed relative distance over the
        columns where both value and target exist; the finest grid if no
        column can be compared
    """
    def distance(m: int) -> float:
        total = 0.0
        for value, target in zip(values_by_m[m], targets):
            if value is not None and target is not None:
                total += abs(value - target) / abs(target)
        return total

    comparable = any(
        v is not None and t is not None
        for values in values_by_m.values()
        for v, t in zip(values, targets)
    )
    if not comparable:
        return max(values_by_m)
    return min(sorted(values_by_m), key=distance)
