"""Greedy tree packings for dynamic min-cut and arboricity estimation."""

__version__ = "0.1.0"
