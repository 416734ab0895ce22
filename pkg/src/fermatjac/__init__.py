"""Exact invariants of the Jacobians J_m of y^2 = x^m + 1."""

from .cyclotomic import CycloElement, ComplexApprox, NotInSubfield

__all__ = ["CycloElement", "ComplexApprox", "NotInSubfield"]
__version__ = "0.1.0"
