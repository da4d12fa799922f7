"""Exact umbral calculus for Lévy processes: moments, cumulants, time-space harmonic polynomials."""

from .levy import LevySpec, ProcessUmbra, from_triplet, named_process
from .polyring import Poly, Series
from .umbra import Umbra, special

__all__ = ["LevySpec", "Poly", "ProcessUmbra", "Series", "Umbra", "from_triplet", "named_process", "special"]
