"""Code equivalence, Reed-Muller codes and the support splitting attack over GF(2)."""

__version__ = "0.1.0"
