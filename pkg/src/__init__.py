"""
Fractional Variational Toolkit.

Special functions, fractional operators and closed-form solutions of a
fractional variational problem, with a CLI that reproduces the comparison
table and figure data.
"""

__version__ = "1.0.0"
__author__ = "fracvar developers"

from .config import settings
from .ui import CLI

__all__ = [
    "settings",
    "CLI",
]
