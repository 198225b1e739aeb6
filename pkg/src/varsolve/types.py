"""
Domain types for the worked variational problem.
"""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config.settings import settings
from src.errors import SolutionNotExistError
from src.fracops.types import Order


class Method(str, Enum):
    """Which necessary condition produced a solution."""

    CLASSICAL = "classical"
    CRL = "crl"
    CC = "cc"


class SolutionSpec(BaseModel):
    """
    A closed-form solution at a given order.

    Attributes:
        kind: Classical, C-RL or C-C
        ord: Fractional order; Classical requires alpha = 1, C-RL requires
            alpha above the divergence threshold

    Example:
        >>> SolutionSpec.of(Method.CC, 0.4).ord.alpha
        0.4
    """

    model_config = ConfigDict(frozen=True)

    kind: Method
    ord: Order

    @classmethod
    def of(cls, kind: Method, alpha: float) -> "SolutionSpec":
        """
        Build a spec, raising SolutionNotExistError for C-RL at alpha <= 0.5.
        """
        kind = Method(kind)
        if kind is Method.CRL and alpha <= settings.crl_order_threshold:
            raise SolutionNotExistError(alpha)
        return cls(kind=kind, ord=Order(alpha=alpha))

    @model_validator(mode="after")
    def _check_order(self) -> "SolutionSpec":
        if self.kind is Method.CRL and self.ord.alpha <= settings.crl_order_threshold:
            raise ValueError("solution does not exist for alpha <= 0.5")
        if self.kind is Method.CLASSICAL and not self.ord.is_classical:
            raise ValueError("the classical solution requires alpha = 1")
        return self


class FunctionalValue(BaseModel):
    """
    Discretized value of the cost functional.

    Attributes:
        J: Riemann-sum value
        m: Grid steps used
        method: Label of the solution the samples came from
    """

    model_config = ConfigDict(frozen=True)

    J: float
    m: int = Field(ge=2)
    method: Method

    @field_validator("J")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError(f"functional value must be finite, got {value}")
        return value
