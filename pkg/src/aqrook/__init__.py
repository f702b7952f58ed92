"""Exact (a;q)-rook theory and the basic hypergeometric summations it proves."""

__version__ = "0.1.0"
