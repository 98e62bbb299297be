"""Certified extraction of highly connected induced subgraphs with small frontiers."""

from __future__ import annotations

from .graph import Graph, GraphError, bits, members, popcount, to_mask
from .weights import CutPartition

__version__ = "0.1.0"

__all__ = ["CutPartition", "Graph", "GraphError", "bits", "members", "popcount", "to_mask", "__version__"]
