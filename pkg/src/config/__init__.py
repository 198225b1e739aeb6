"""
Configuration and settings management.

This module provides Pydantic-based settings for numerical defaults.
"""

from .settings import Settings, settings

__all__ = ["Settings", "settings"]
