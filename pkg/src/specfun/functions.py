"""
Scalar special functions: Gamma, Mittag-Leffler and Gauss hypergeometric.

Gamma on the positive axis comes from scipy.special; negative non-integer
arguments go through the reflection formula. The two series are summed term
by term under a SeriesControl truncation policy, except that 2F1 points
close to 1 (where the series decays only algebraically) are handed to
scipy.special.hyp2f1.
"""

import logging
import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import special as scipy_special

from src.config.settings import settings
from src.errors import (
    DivergenceError,
    DomainError,
    GammaOverflowError,
    NonConvergenceError,
    PoleError,
)

logger = logging.getLogger(__name__)


class SeriesControl(BaseModel):
    """
    Truncation policy for infinite series.

    Attributes:
        tol: Stop once the next term is below tol times the partial sum
        max_terms: Cap on the number of terms before giving up

    Example:
        >>> SeriesControl(tol=1e-10, max_terms=500).max_terms
        500
    """

    model_config = ConfigDict(frozen=True)

    tol: float = Field(default_factory=lambda: settings.series_tol, gt=0.0, lt=1.0)
    max_terms: int = Field(default_factory=lambda: settings.series_max_terms, ge=1)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    """
    Compute the Gamma function on the real line.

    Args:
        x: Finite argument, not a non-positive integer

    Returns:
        Gamma(x)

    Raises:
        PoleError: x is 0, -1, -2, ...
        GammaOverflowError: |Gamma(x)| exceeds the double range
        DomainError: x is not finite

    Example:
        >>> gamma(5.0)
        24.0
    """
    if not math.isfinite(x):
        raise DomainError(f"gamma requires a finite argument, got {x}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at {x}")

    if x > 0:
        value = float(scipy_special.gamma(x))
    else:
        # Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        mirrored = float(scipy_special.gamma(1.0 - x))
        if math.isinf(mirrored):
            return 0.0
        value = math.pi / (math.sin(math.pi * x) * mirrored)

    if not math.isfinite(value):
        raise GammaOverflowError(f"gamma({x}) overflows double precision")
    return value


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x), which is exactly zero at the poles of Gamma."""
    return float(scipy_special.rgamma(x))


def mittag_leffler(
    alpha: float,
    beta: float,
    z: float,
    ctl: Optional[SeriesControl] = None
) -> float:
    """
    Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z.

    Sums z^k / Gamma(alpha k + beta) until the next term drops below
    ctl.tol relative to the partial sum.

    Args:
        alpha: Positive order
        beta: Positive shift
        z: Finite real argument
        ctl: Truncation policy (defaults from settings)

    Returns:
        Partial sum of the series

    Raises:
        DomainError: alpha or beta not positive, or z not finite
        NonConvergenceError: ctl.max_terms reached first

    Example:
        >>> round(mittag_leffler(1.0, 1.0, 1.0), 9)
        2.718281828
    """
    ctl = ctl or SeriesControl()
    if alpha <= 0 or beta <= 0:
        raise DomainError(f"mittag_leffler requires alpha > 0 and beta > 0, got ({alpha}, {beta})")
    if not math.isfinite(z):
        raise DomainError(f"mittag_leffler requires a finite argument, got {z}")

    if z == 0.0:
        return reciprocal_gamma(beta)

    log_abs_z = math.log(abs(z))
    negative = z < 0

    def term(k: int) -> float:
        magnitude = math.exp(k * log_abs_z - scipy_special.gammaln(alpha * k + beta))
        return -magnitude if (negative and k % 2) else magnitude

    total = term(0)
    for k in range(1, ctl.max_terms):
        nxt = term(k)
        if abs(nxt) < ctl.tol * abs(total):
            logger.debug("mittag_leffler(%g, %g, %g) converged after %d terms", alpha, beta, z, k)
            return total
        total += nxt

    raise NonConvergenceError(
        f"mittag_leffler({alpha}, {beta}, {z}) did not reach tol={ctl.tol} "
        f"within {ctl.max_terms} terms",
        terms=ctl.max_terms,
    )


def gauss_sum(a: float, b: float, c: float) -> float:
    """
    Value of 2F1(a, b; c; 1) by Gauss's summation theorem.

    Raises:
        DivergenceError: c - a - b <= 0, where the series diverges at x = 1
    """
    excess = c - a - b
    if excess <= 0:
        raise DivergenceError(
            f"2F1({a}, {b}; {c}; 1) diverges: c - a - b = {excess} <= 0"
        )
    return (
        gamma(c) * gamma(excess) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b)
    )


def _terminating_degree(a: float, b: float) -> Optional[int]:
    degrees = [int(-p) for p in (a, b) if _is_nonpositive_integer(p)]
    return min(degrees) if degrees else None


def hyp2f1_array(
    a: float,
    b: float,
    c: float,
    xs: np.ndarray,
    ctl: Optional[SeriesControl] = None
) -> np.ndarray:
    """
    Gauss hypergeometric series evaluated at many points of [0, 1].

    All points share one term recurrence
    t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)) x, so no Gamma is evaluated at
    negative arguments. Points drop out individually once their next term is
    below ctl.tol relative to their partial sum. A terminating series (a or b
    a non-positive integer) is summed to its last term regardless of ctl.
    Points equal to 1 take the Gauss summation value; points above
    settings.hyp2f1_series_max_x and below 1 are evaluated by
    scipy.special.hyp2f1, which switches to the 1 - x transformation there.

    Args:
        a, b, c: Series parameters, c not a non-positive integer
        xs: Points in [0, 1]
        ctl: Truncation policy (defaults from settings)

    Returns:
        Array of 2F1(a, b; c; x) with the shape of xs

    Raises:
        DomainError: c is a pole or some x lies outside [0, 1]
        DivergenceError: x = 1 requested with c - a - b <= 0
        NonConvergenceError: some series point did not converge within
            ctl.max_terms, or a delegated point came back non-finite
    """
    ctl = ctl or SeriesControl()
    xs = np.asarray(xs, dtype=float)
    _check_parameters(a, b, c)
    if xs.size and (not np.all(np.isfinite(xs)) or xs.min() < 0.0 or xs.max() > 1.0):
        raise DomainError("hyp2f1 is evaluated only on [0, 1]")

    degree = _terminating_degree(a, b)
    flat = xs.ravel()
    result = np.empty_like(flat)

    if degree is not None:
        term = np.ones_like(flat)
        result[:] = 1.0
        for n in range(degree):
            term = term * ((a + n) * (b + n) / ((c + n) * (n + 1))) * flat
            result += term
        return result.reshape(xs.shape)

    at_one = flat == 1.0
    if at_one.any():
        result[at_one] = gauss_sum(a, b, c)

    near_one = ~at_one & (flat > settings.hyp2f1_series_max_x)
    if near_one.any():
        delegated = scipy_special.hyp2f1(a, b, c, flat[near_one])
        if not np.all(np.isfinite(delegated)):
            raise NonConvergenceError(
                f"2F1({a}, {b}; {c}; x) is not finite near x = 1", terms=0
            )
        result[near_one] = delegated

    idx = np.flatnonzero(~at_one & ~near_one)
    x = flat[idx]
    term = np.ones_like(x)
    total = np.ones_like(x)

    for n in range(ctl.max_terms):
        if idx.size == 0:
            logger.debug("2F1(%g, %g; %g) series converged after %d terms", a, b, c, n)
            return result.reshape(xs.shape)
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1))) * x
        done = np.abs(term) <= ctl.tol * np.abs(total)
        if done.any():
            result[idx[done]] = total[done]
            keep = ~done
            idx, x, term, total = idx[keep], x[keep], term[keep], total[keep]
        total = total + term

    if idx.size == 0:
        return result.reshape(xs.shape)
    raise NonConvergenceError(
        f"2F1({a}, {b}; {c}; x) did not reach tol={ctl.tol} within "
        f"{ctl.max_terms} terms at x = {float(x.max()):.6g}",
        terms=ctl.max_terms,
    )


def _check_parameters(a: float, b: float, c: float) -> None:
    if not all(math.isfinite(p) for p in (a, b, c)):
        raise DomainError(f"hyp2f1 parameters must be finite, got ({a}, {b}, {c})")
    if _is_nonpositive_integer(c):
        raise PoleError(f"hyp2f1 is undefined for c = {c}")


def hyp2f1(
    a: float,
    b: float,
    c: float,
    x: float,
    ctl: Optional[SeriesControl] = None
) -> float:
    """
    Gauss hypergeometric function 2F1(a, b; c; x) for x in [0, 1].

    At x = 1 a non-terminating series is replaced by its Gauss summation
    value, which exists only when c - a - b > 0.

    Args:
        a, b, c: Series parameters, c not a non-positive integer
        x: Point in [0, 1]
        ctl: Truncation policy (defaults from settings)

    Returns:
        2F1(a, b; c; x)

    Raises:
        DivergenceError: x = 1 and c - a - b <= 0
        NonConvergenceError: ctl.max_terms exhausted

    Example:
        >>> round(hyp2f1(1.0, -1.0, 2.0, 0.6), 12)
        0.7
    """
    return float(hyp2f1_array(a, b, c, np.array([x], dtype=float), ctl)[0])
