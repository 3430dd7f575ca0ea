"""Exact mixed-moments of Gaussian elliptic random matrices."""

__version__ = "0.1.0"
