"""
Domain types for fractional operators: order, uniform grid and sampled values.
"""

from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Order(BaseModel):
    """
    Fractional order alpha in (0, 1].

    Attributes:
        alpha: Order of differentiation; alpha = 1 is the classical limit
    """

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0, le=1.0)

    @property
    def is_classical(self) -> bool:
        return self.alpha == 1.0


class Grid(BaseModel):
    """
    Uniform partition of [a, b] into m steps.

    Attributes:
        a: Left endpoint
        b: Right endpoint
        m: Number of steps

    Example:
        >>> Grid(a=0.0, b=1.0, m=4).node(2)
        0.5
    """

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    m: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_interval(self) -> "Grid":
        if not (np.isfinite(self.a) and np.isfinite(self.b)) or self.b <= self.a:
            raise ValueError(f"grid requires finite endpoints with b > a, got [{self.a}, {self.b}]")
        return self

    @classmethod
    def unit(cls, m: int) -> "Grid":
        """Uniform grid on [0, 1]."""
        return cls(a=0.0, b=1.0, m=m)

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.m

    def node(self, i: int) -> float:
        if i == self.m:
            return self.b
        return self.a + i * self.h

    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.m + 1)


class SampledFunction(BaseModel):
    """
    Function values on every node of a Grid.

    The values array is copied on construction and marked read-only.

    Attributes:
        grid: Grid the samples live on
        values: values[i] = y(grid.node(i)), length grid.m + 1
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _to_array(cls, value) -> np.ndarray:
        array = np.array(value, dtype=float, copy=True)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_samples(self) -> "SampledFunction":
        if self.values.shape != (self.grid.m + 1,):
            raise ValueError(
                f"expected {self.grid.m + 1} samples, got shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("samples must be finite")
        return self

    @classmethod
    def from_callable(cls, grid: Grid, fn: Callable[[np.ndarray], np.ndarray]) -> "SampledFunction":
        """
        Sample a vectorized function on every grid node.

        Scalar results (constant functions) are broadcast to all nodes.
        """
        nodes = grid.nodes()
        values = np.broadcast_to(np.asarray(fn(nodes), dtype=float), nodes.shape)
        return cls(grid=grid, values=values)

    def reflected(self) -> "SampledFunction":
        """Samples of y(a + b - x): node i of the result holds values[m - i]."""
        return SampledFunction(grid=self.grid, values=self.values[::-1])
