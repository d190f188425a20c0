"""Sparse convex wavelet clustering."""

__version__ = "0.1.0"
