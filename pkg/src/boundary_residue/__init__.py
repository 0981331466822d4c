"""Exact re-derivation of the boundary residue term for D + c(X) in dimension five."""

__version__ = "0.1.0"
