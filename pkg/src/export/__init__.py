"""
Export utilities for saving computed artifacts to files.
"""

from .export_manager import ArtifactExporter

__all__ = ["ArtifactExporter"]
