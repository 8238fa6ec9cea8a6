"""Finite rings as tables, their ring-theoretic properties, and the
implication graph between those properties."""

__version__ = "0.1.0"
