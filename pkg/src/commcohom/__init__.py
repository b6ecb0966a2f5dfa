"""Rational cohomology of commuting varieties of compact Lie groups."""

from .commvar import PoincareResult, closed_form_n1, poincare_polynomial
from .polyalg import IntPolynomial, NonExactDivision
from .rootdata import CartanFactor, GroupSpec, SpecError, parse_spec
from .weylclasses import CapExceeded, CharPolyClass, distribution

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CartanFactor",
    "CharPolyClass",
    "GroupSpec",
    "IntPolynomial",
    "NonExactDivision",
    "PoincareResult",
    "SpecError",
    "closed_form_n1",
    "distribution",
    "parse_spec",
    "poincare_polynomial",
]
