"""Exact LP / symmetric game / Chebyshev and l1 reductions - Main package."""

__version__ = "0.1.0"
__description__ = "Exact-rational reductions between linear programs, symmetric games and Chebyshev/l1 approximation"
