"""Exact symmetric functions and Witt vectors over the Boolean semiring and its relatives."""

__version__ = "0.1.0"
