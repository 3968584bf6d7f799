"""Symbolic calculator for binary quadratic operad presentations."""

__version__ = "0.1.0"
