"""Computational tools for theta lifts of vector-valued modular forms."""

__version__ = "0.1.0"
