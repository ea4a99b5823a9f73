"""Exact determinant moments, random density matrices and moment inversion."""

__version__ = "0.1.0"
