"""Exact computations in the stable module category of SL2(F_p)."""

__version__ = "0.1.0"
