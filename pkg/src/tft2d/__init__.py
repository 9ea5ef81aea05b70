"""Exact algebraic models of 2d topological field theories and their reflection positivity."""

__version__ = "0.1.0"
