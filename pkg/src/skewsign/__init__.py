"""Exact sign-imbalance and domino tableau combinatorics for skew shapes."""

__version__ = "0.1.0"
