"""
Fractional integral and derivative operators for 0 < alpha <= 1.

Analytic rules cover power and constant kernels; numerical operators act on
SampledFunction data. The L1 scheme approximates the left Caputo derivative
at node i by

    sum_{k=0}^{i-1} b_{i-k-1} (y_{k+1} - y_k),
    b_k = h^{-alpha} / Gamma(2 - alpha) [(k+1)^{1-alpha} - k^{1-alpha}],

and the right Caputo derivative is the same sum on reflected samples.
"""

import logging
import math

import numpy as np

from src.errors import DomainError, IndexRangeError
from src.fracops.types import Order, SampledFunction
from src.specfun import gamma, reciprocal_gamma

logger = logging.getLogger(__name__)


# ===== Analytic rules =====

def _power_rule(beta: float, alpha: float, distance: float) -> float:
    """Gamma(1+beta)/Gamma(1+beta-alpha) * distance^(beta-alpha)."""
    if math.isclose(beta, alpha - 1.0, rel_tol=0.0, abs_tol=1e-12):
        return 0.0  # 1/Gamma(0)
    coefficient = gamma(1.0 + beta) * reciprocal_gamma(1.0 + beta - alpha)
    if coefficient == 0.0:
        return 0.0
    exponent = beta - alpha
    if distance == 0.0:
        if exponent > 0:
            return 0.0
        if exponent == 0:
            return coefficient
        raise DomainError(f"power rule is singular at the endpoint (exponent {exponent})")
    return coefficient * distance ** exponent


def caputo_left_power(beta: float, ord: Order, a: float, x: float) -> float:
    """
    Left Caputo derivative of (x - a)^beta.

    Args:
        beta: Positive exponent
        ord: Fractional order
        a: Left endpoint
        x: Evaluation point, x >= a

    Returns:
        Gamma(1+beta)/Gamma(1+beta-alpha) (x-a)^(beta-alpha)

    Example:
        >>> round(caputo_left_power(1.0, Order(alpha=0.5), 0.0, 1.0), 8)
        1.12837917
    """
    if beta <= 0:
        raise DomainError(f"caputo_left_power requires beta > 0, got {beta}")
    if x < a:
        raise DomainError(f"x = {x} lies left of a = {a}")
    return _power_rule(beta, ord.alpha, x - a)


def caputo_right_power(beta: float, ord: Order, b: float, x: float) -> float:
    """Right Caputo derivative of (b - x)^beta for beta > 0 and x <= b."""
    if beta <= 0:
        raise DomainError(f"caputo_right_power requires beta > 0, got {beta}")
    if x > b:
        raise DomainError(f"x = {x} lies right of b = {b}")
    return _power_rule(beta, ord.alpha, b - x)


def rl_left_power(beta: float, ord: Order, a: float, x: float) -> float:
    """
    Left Riemann-Liouville derivative of (x - a)^beta for beta > -1.

    The kernel (x - a)^(alpha - 1) is mapped to exactly 0.
    """
    if beta <= -1:
        raise DomainError(f"rl_left_power requires beta > -1, got {beta}")
    if x < a:
        raise DomainError(f"x = {x} lies left of a = {a}")
    return _power_rule(beta, ord.alpha, x - a)


def rl_right_power(beta: float, ord: Order, b: float, x: float) -> float:
    """
    Right Riemann-Liouville derivative of (b - x)^beta.

    Args:
        beta: Exponent, beta > -1
        ord: Fractional order
        b: Right endpoint
        x: Evaluation point, x <= b

    Returns:
        Gamma(1+beta)/Gamma(1+beta-alpha) (b-x)^(beta-alpha); exactly 0 for
        the kernel beta = alpha - 1

    Example:
        >>> rl_right_power(-0.5, Order(alpha=0.5), 1.0, 0.3)
        0.0
    """
    if beta <= -1:
        raise DomainError(f"rl_right_power requires beta > -1, got {beta}")
    if x > b:
        raise DomainError(f"x = {x} lies right of b = {b}")
    return _power_rule(beta, ord.alpha, b - x)


def caputo_of_constant(K: float, ord: Order) -> float:
    """Caputo derivatives annihilate constants."""
    return 0.0


def rl_left_of_constant(K: float, ord: Order, a: float, x: float) -> float:
    """
    Left Riemann-Liouville derivative of the constant K.

    Returns:
        K / Gamma(1 - alpha) (x - a)^(-alpha)

    Raises:
        DomainError: x <= a (singular) or alpha = 1 (classical case belongs
            to the caller)
    """
    if ord.is_classical:
        raise DomainError("rl_left_of_constant is defined for alpha < 1")
    if x <= a:
        raise DomainError(f"rl_left_of_constant is singular at x = {x} <= a = {a}")
    return K / gamma(1.0 - ord.alpha) * (x - a) ** (-ord.alpha)


def rl_right_of_constant(K: float, ord: Order, b: float, x: float) -> float:
    """Right Riemann-Liouville derivative of K: K / Gamma(1 - alpha) (b - x)^(-alpha)."""
    if ord.is_classical:
        raise DomainError("rl_right_of_constant is defined for alpha < 1")
    if x >= b:
        raise DomainError(f"rl_right_of_constant is singular at x = {x} >= b = {b}")
    return K / gamma(1.0 - ord.alpha) * (b - x) ** (-ord.alpha)


def caputo_rl_correction(f_endpoint: float, ord: Order, distance: float) -> float:
    """
    Gap between Riemann-Liouville and Caputo derivatives.

    RL[f](x) - Caputo[f](x) = f(endpoint) / Gamma(1 - alpha) * distance^(-alpha),
    where distance is x - a (left) or b - x (right). Vanishes at alpha = 1.
    """
    if distance <= 0:
        raise DomainError(f"correction is singular at distance {distance}")
    return f_endpoint * reciprocal_gamma(1.0 - ord.alpha) * distance ** (-ord.alpha)


# ===== Numerical operators =====

def _check_index(i: int, lo: int, hi: int, name: str) -> None:
    if not lo <= i <= hi:
        raise IndexRangeError(f"{name}: node index {i} outside [{lo}, {hi}]")


def l1_weights(ord: Order, h: float, n: int) -> np.ndarray:
    """
    L1 coefficients b_0 .. b_{n-1}.

    At alpha = 1 they reduce to b_k = delta_{k,0} / h.
    """
    alpha = ord.alpha
    powers = np.arange(n + 1, dtype=float) ** (1.0 - alpha)
    powers[0] = 0.0
    return h ** (-alpha) * reciprocal_gamma(2.0 - alpha) * np.diff(powers)


def caputo_left_l1(f: SampledFunction, ord: Order, i: int) -> float:
    """
    L1 approximation of the left Caputo derivative at node i.

    Args:
        f: Sampled function
        ord: Fractional order
        i: Node index, 1 <= i <= m

    Returns:
        sum_{k=0}^{i-1} b_{i-k-1} (values[k+1] - values[k])

    Raises:
        IndexRangeError: i outside [1, m]
    """
    _check_index(i, 1, f.grid.m, "caputo_left_l1")
    weights = l1_weights(ord, f.grid.h, i)
    increments = np.diff(f.values[: i + 1])
    return float(np.dot(weights[::-1], increments))


def caputo_right_l1(f: SampledFunction, ord: Order, i: int) -> float:
    """
    L1 approximation of the right Caputo derivative at node i.

    Equals caputo_left_l1 on the reflected samples at index m - i.

    Raises:
        IndexRangeError: i outside [0, m - 1]
    """
    _check_index(i, 0, f.grid.m - 1, "caputo_right_l1")
    return caputo_left_l1(f.reflected(), ord, f.grid.m - i)


def caputo_left_l1_all(f: SampledFunction, ord: Order) -> np.ndarray:
    """
    Left L1 derivative at every node; entry 0 is 0.

    Entry i agrees with caputo_left_l1(f, ord, i) up to rounding.
    """
    m = f.grid.m
    weights = l1_weights(ord, f.grid.h, m)
    result = np.zeros(m + 1)
    result[1:] = np.convolve(weights, np.diff(f.values))[:m]
    return result


def caputo_right_l1_all(f: SampledFunction, ord: Order) -> np.ndarray:
    """Right L1 derivative at every node; entry m is 0."""
    return caputo_left_l1_all(f.reflected(), ord)[::-1].copy()


def rl_integral_num(f: SampledFunction, ord: Order, i: int) -> float:
    """
    Left Riemann-Liouville integral of order alpha at node i.

    Product-rectangle rule: the sample at the left node of each cell is
    multiplied by the exact cell moment of the kernel (x_i - s)^(alpha-1),
    h^alpha / Gamma(1+alpha) [(i-k)^alpha - (i-k-1)^alpha].

    Args:
        f: Sampled function
        ord: Fractional order
        i: Node index, 1 <= i <= m

    Raises:
        IndexRangeError: i outside [1, m]

    Example:
        >>> from src.fracops.types import Grid
        >>> ones = SampledFunction.from_callable(Grid.unit(8), lambda x: 1.0)
        >>> rl_integral_num(ones, Order(alpha=1.0), 8)
        1.0
    """
    _check_index(i, 1, f.grid.m, "rl_integral_num")
    alpha = ord.alpha
    powers = np.arange(i + 1, dtype=float) ** alpha
    moments = np.diff(powers)[::-1]  # cell k has distance index i - k
    scale = f.grid.h ** alpha * reciprocal_gamma(1.0 + alpha)
    return float(scale * np.dot(moments, f.values[:i]))
