"""Graph, orientation and edge-coloring value types, plus their text formats."""

from src.graphs.core import EdgeColoring, Graph, Orientation

__all__ = ["EdgeColoring", "Graph", "Orientation"]
