"""
Template system for reproduction artifacts.

This module provides the figure layouts and the reference table.
"""

from .figure_templates import (
    get_figure_template,
    list_available_templates,
    customize_template,
    reference_values,
    FIGURE_CONVERGENCE_TEMPLATE,
    FIGURE_COMPARISON_TEMPLATE,
    FIGURE_CC_SMALL_ORDER_TEMPLATE,
    REFERENCE_TABLE,
)

__all__ = [
    "get_figure_template",
    "list_available_templates",
    "customize_template",
    "reference_values",
    "FIGURE_CONVERGENCE_TEMPLATE",
    "FIGURE_COMPARISON_TEMPLATE",
    "FIGURE_CC_SMALL_ORDER_TEMPLATE",
    "REFERENCE_TABLE",
]
