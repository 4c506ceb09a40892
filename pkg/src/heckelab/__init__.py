"""Exact-arithmetic lab for root data, parahoric filtration bookkeeping,
finite-group Clifford decompositions, and Iwahori-Hecke center checks."""

__version__ = "0.1.0"
