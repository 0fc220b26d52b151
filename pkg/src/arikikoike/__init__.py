"""Exact computation in the Ariki-Koike algebra H_m^r."""

from __future__ import annotations

from .algebra import AlgebraContext, AlgebraElement, context, generator, jucys_murphy
from .rings import LaurentPoly, Specialization, SymbolicDomain, generic_specialization, parse_specialization

__all__ = [
    "AlgebraContext", "AlgebraElement", "context", "generator", "jucys_murphy",
    "LaurentPoly", "Specialization", "SymbolicDomain", "generic_specialization",
    "parse_specialization",
]

__version__ = "0.1.0"
