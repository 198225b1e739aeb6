"""
Record schemas for CLI runs, table rows and figure data.
"""

from pathlib import Path
from typing import Dict, List, Literal, Optional, TypedDict, Union

from pydantic import BaseModel, ConfigDict, Field

from src.config.settings import settings
from src.varsolve.types import Method

# Table cell value where the C-RL solution does not exist
NOT_EXISTS = "NOT_EXISTS"


class RunConfig(BaseModel):
    """
    One CLI invocation of solve or functional.

    Attributes:
        alpha: Fractional order in (0, 1]
        method: classical, crl or cc
        m: Grid steps
        tol: Series tolerance
        output_format: csv or json
        output_path: Target file; None writes to stdout
    """

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0, le=1.0)
    method: Method
    m: int = Field(default_factory=lambda: settings.default_grid_steps, ge=1)
    tol: float = Field(default_factory=lambda: settings.series_tol, gt=0.0, lt=1.0)
    output_format: Literal["csv", "json"] = "csv"
    output_path: Optional[Path] = None


class TableRow(TypedDict):
    """
    One row of the functional-value table.

    Attributes:
        alpha: Fractional order
        j_crl: J of the C-RL solution, or NOT_EXISTS
        j_cc: J of the C-C solution
        m: Grid size selected from the sweep
        j_crl_limit: Extrapolated C-RL value, or NOT_EXISTS
        j_cc_limit: Extrapolated C-C value
    """
    alpha: float
    j_crl: Union[float, str]
    j_cc: float
    m: int
    j_crl_limit: Union[float, str]
    j_cc_limit: float


TABLE_FIELDS = ["alpha", "j_crl", "j_cc", "m", "j_crl_limit", "j_cc_limit"]


class FigureData(TypedDict):
    """
    Columns of one figure data file.

    Attributes:
        name: Template name
        filename: Output file name
        columns: Column order, starting with x and y_classical
        rows: One record per grid node
    """
    name: str
    filename: str
    columns: List[str]
    rows: List[Dict[str, float]]
