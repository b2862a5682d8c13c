"""Exact linearwidth and pathwidth of small graphs, with checkable certificates."""

__version__ = "0.1.0"
