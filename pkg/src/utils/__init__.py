"""
Utility modules for input validation.
"""

from .grid_validator import GridValidator

__all__ = ["GridValidator"]
