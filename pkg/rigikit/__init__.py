"""Exact rigidity and spectral analysis of small graphs."""

__version__ = "1.0.0"
