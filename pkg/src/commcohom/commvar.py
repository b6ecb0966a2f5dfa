"""Poincaré polynomials of commuting varieties.

For a connected compact reductive ``G`` with maximal torus ``T`` and Weyl
group ``W``, the space of commuting ``n``-tuples has the rational cohomology
of ``(G/T x T^n)/W``, i.e. the ``W``-invariants of ``H*(G/T) (x) H*(T)^n``.
Averaging graded traces over ``W`` gives

    P(q) = (1/|W|) sum_w  coinv_w(q^2) * det(1 + q w)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import polyalg
from .gradedchar import coinv_trace, ext_trace, invariant_denominator
from .polyalg import IntPolynomial, eval_int, reverse, scalar_exact_div, substitute_q_squared
from .rootdata import GroupSpec, degrees, semisimple_degrees
from .weylclasses import DEFAULT_ELEMENT_CAP, CharPolyClass, distribution

__all__ = [
    "PoincareResult",
    "poincare_polynomial",
    "poincare_from_classes",
    "closed_form_n1",
    "euler_characteristic",
    "total_betti",
    "is_palindromic",
]


@dataclass(frozen=True)
class PoincareResult:
    spec: GroupSpec
    n: int
    poincare: IntPolynomial
    betti: tuple[int, ...]
    euler: int
    total: int
    manifold_dim: int

    @classmethod
    def build(cls, spec: GroupSpec, n: int, poincare: IntPolynomial) -> "PoincareResult":
        return cls(
            spec=spec,
            n=n,
            poincare=poincare,
            betti=poincare.coeffs,
            euler=eval_int(poincare, -1),
            total=eval_int(poincare, 1),
            manifold_dim=spec.dim_group + (n - 1) * spec.rank,
        )

    @property
    def palindromic(self) -> bool:
        return is_palindromic(self)


def poincare_from_classes(spec: GroupSpec, n: int, classes: list[CharPolyClass]) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    denom = invariant_denominator(degrees(spec))
    acc = IntPolynomial()
    for c in classes:
        coinv = substitute_q_squared(coinv_trace(c.cp_minus, None, denominator=denom))
        acc = acc + coinv * polyalg.pow(ext_trace(c.cp_minus), n) * c.count
    P = scalar_exact_div(acc, spec.weyl_order)
    if any(b < 0 for b in P.coeffs):
        raise AssertionError(f"negative Betti number in {P} for {spec}, n={n}")
    return P


@lru_cache(maxsize=4096)
def _poincare_cached(spec: GroupSpec, n: int) -> PoincareResult:
    return PoincareResult.build(spec, n, poincare_from_classes(spec, n, distribution(spec, _NO_CAP)))


_NO_CAP = 10**18


def poincare_polynomial(
    spec: GroupSpec,
    n: int,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    classes: list[CharPolyClass] | None = None,
) -> PoincareResult:
    """Poincaré polynomial of the ``n``-th commuting variety of ``spec``.

    ``classes`` may carry a precomputed (e.g. cached on disk and validated)
    distribution; otherwise it is computed, subject to ``element_cap``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if classes is not None:
        return PoincareResult.build(spec, n, poincare_from_classes(spec, n, classes))
    distribution(spec, element_cap)  # raises CapExceeded before anything is cached
    return _poincare_cached(spec, n)


def closed_form_n1(spec: GroupSpec) -> IntPolynomial:
    """``prod_d (1 + q^{2d-1}) * (1 + q)^{central rank}``, the Poincaré polynomial of G."""
    p = IntPolynomial([1, 1]) ** spec.central_rank
    for d in semisimple_degrees(spec):
        p = p * IntPolynomial.monomial(1, 2 * d - 1) + p
    return p


def euler_characteristic(result: PoincareResult) -> int:
    return eval_int(result.poincare, -1)


def total_betti(result: PoincareResult) -> int:
    return eval_int(result.poincare, 1)


def is_palindromic(result: PoincareResult) -> bool:
    D = result.manifold_dim
    if result.poincare.degree > D:
        return False
    return reverse(result.poincare, D) == result.poincare
