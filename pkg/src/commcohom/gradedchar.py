"""Graded traces of a Weyl element on H*(G/T) and H*(T).

Both traces are written in the algebraic grading: the coinvariant algebra
in degree ``i`` and the exterior algebra in degree ``i``.  Doubling the
coinvariant grading to cohomological degree is the caller's job.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyalg import IntPolynomial, exact_div, negate_q

__all__ = ["GradedTracePair", "coinv_trace", "ext_trace", "graded_traces"]


@dataclass(frozen=True)
class GradedTracePair:
    coinv: IntPolynomial
    ext: IntPolynomial


def invariant_denominator(degrees) -> IntPolynomial:
    """``prod_d (1 - t^d)``."""
    p = IntPolynomial([1])
    for d in degrees:
        p = p * IntPolynomial([1] + [0] * (d - 1) + [-1])
    return p


def coinv_trace(cp_minus: IntPolynomial, degrees, *, denominator: IntPolynomial | None = None) -> IntPolynomial:
    """Graded trace of ``w`` on the coinvariant algebra.

    The polynomial ring has graded trace ``1/det(1 - t w)`` and is free over
    the invariants, whose series is ``1/prod(1 - t^d)``; the quotient is a
    polynomial.  Degree-1 entries from a central torus cancel against the
    matching ``(1 - t)`` factors of ``cp_minus``.
    """
    if denominator is None:
        denominator = invariant_denominator(degrees)
    return exact_div(denominator, cp_minus)


def ext_trace(cp_minus: IntPolynomial) -> IntPolynomial:
    """``det(1 + q w)``, the graded trace on the exterior algebra."""
    return negate_q(cp_minus)


def graded_traces(cp_minus: IntPolynomial, degrees) -> GradedTracePair:
    return GradedTracePair(coinv_trace(cp_minus, degrees), ext_trace(cp_minus))
