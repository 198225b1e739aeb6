"""
User interface components for the fractional variational toolkit.

This module provides the CLI command layer.
"""

from .cli import CLI

__all__ = ["CLI"]
