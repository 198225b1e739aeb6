"""
Reproduction of the solution curves, functional values and figure data.
"""

from .records import NOT_EXISTS, TABLE_FIELDS, FigureData, RunConfig, TableRow
from .pipeline import (
    build_figure,
    build_table,
    create_run_config,
    derivative_records,
    functional_record,
    functional_value,
    series_control,
    solution_records,
)

__all__ = [
    "NOT_EXISTS",
    "TABLE_FIELDS",
    "FigureData",
    "RunConfig",
    "TableRow",
    "build_figure",
    "build_table",
    "create_run_config",
    "derivative_records",
    "functional_record",
    "functional_value",
    "series_control",
    "solution_records",
]
