"""Brute-force cross-checks that bypass the bucketed pipeline.

Everything here works element by element on explicit Weyl matrices found by
plain breadth-first closure, sharing only polynomial arithmetic with the
main engine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import polyalg
from .polyalg import IntPolynomial, char_poly_det, exact_div, series_inverse
from .rootdata import GroupSpec, degrees, simple_reflection_matrices
from .weylclasses import CapExceeded

__all__ = ["WeylMatrixSet", "enumerate_weyl", "poincare_brute", "molien_degrees_check", "DEFAULT_ORACLE_CAP"]

DEFAULT_ORACLE_CAP = 10_000


@dataclass(frozen=True)
class WeylMatrixSet:
    matrices: np.ndarray  # (|W|, r, r) int64, identity first
    spec: GroupSpec

    def __len__(self) -> int:
        return len(self.matrices)


def _block_generators(spec: GroupSpec) -> list[np.ndarray]:
    r = spec.rank
    gens = []
    offset = 0
    for f in spec.factors:
        for S in simple_reflection_matrices(f):
            G = np.eye(r, dtype=np.int64)
            G[offset:offset + f.rank, offset:offset + f.rank] = S
            gens.append(G)
        offset += f.rank
    return gens


def enumerate_weyl(spec: GroupSpec, cap: int = DEFAULT_ORACLE_CAP) -> WeylMatrixSet:
    if spec.weyl_order > cap:
        raise CapExceeded(f"W({spec}) has {spec.weyl_order} elements, above the oracle cap {cap}")
    r = spec.rank
    ident = np.eye(r, dtype=np.int64)
    gens = _block_generators(spec)
    seen = {ident.tobytes()}
    elements = [ident]
    frontier = ident[None]
    while len(frontier) and gens:
        fresh = []
        for G in gens:
            for M in frontier @ G:
                key = M.tobytes()
                if key not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"closure of W({spec}) exceeded {cap} elements")
                    seen.add(key)
                    fresh.append(M)
        elements.extend(fresh)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, r, r)
    return WeylMatrixSet(np.stack(elements).astype(np.int64), spec)


def _char_polys(ws: WeylMatrixSet) -> list[IntPolynomial]:
    return [IntPolynomial(row) for row in polyalg.char_poly_det_batch(ws.matrices).tolist()]


def poincare_brute(spec: GroupSpec, n: int, cap: int = DEFAULT_ORACLE_CAP) -> IntPolynomial:
    """Sum the invariant-trace formula over every element of W individually."""
    ws = enumerate_weyl(spec, cap)
    denom = IntPolynomial([1])
    for d in degrees(spec):
        denom = denom * (IntPolynomial([1]) - IntPolynomial.monomial(1, d))
    acc = IntPolynomial()
    for cp in _char_polys(ws):
        coinv = exact_div(denom, cp)
        spread = [0] * (2 * len(coinv))
        spread[::2] = coinv.coeffs
        coinv_q2 = IntPolynomial(spread)
        plus = IntPolynomial(c * (-1) ** k for k, c in enumerate(cp.coeffs))
        acc = acc + coinv_q2 * plus**n
    return polyalg.scalar_exact_div(acc, len(ws))


def molien_degrees_check(spec: GroupSpec, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Compare the averaged Molien series with ``prod 1/(1 - q^d)`` up to order ``sum d``."""
    ws = enumerate_weyl(spec, cap)
    degs = degrees(spec)
    order = sum(degs)
    lhs = [0] * (order + 1)
    inverses: dict[IntPolynomial, list[int]] = {}
    for cp in _char_polys(ws):
        inv = inverses.get(cp)
        if inv is None:
            inv = inverses[cp] = series_inverse(cp, order)
        for k, c in enumerate(inv):
            lhs[k] += c
    rhs_poly = IntPolynomial([1])
    for d in degs:
        rhs_poly = rhs_poly * (IntPolynomial([1]) - IntPolynomial.monomial(1, d))
    rhs = series_inverse(rhs_poly, order)
    return lhs == [len(ws) * c for c in rhs]
