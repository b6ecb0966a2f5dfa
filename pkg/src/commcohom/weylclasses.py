"""Characteristic-polynomial distributions of Weyl groups.

The main formula only depends on a Weyl element ``w`` through
``det(1 - q w)`` on the reflection representation, so the group is summarised
as a list of ``(det(1 - q w), number of such w)`` buckets.  Classical types
use cycle-type combinatorics; exceptional types are enumerated.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .polyalg import IntPolynomial, char_poly_det, exact_div
from .rootdata import CartanFactor, GroupSpec, cartan_matrix

__all__ = [
    "CharPolyClass",
    "SignedCycleType",
    "CapExceeded",
    "DEFAULT_ELEMENT_CAP",
    "distribution_classical",
    "distribution_enumerated",
    "distribution",
    "iter_weyl_chunks",
    "dump_distribution",
    "load_distribution",
]

DEFAULT_ELEMENT_CAP = 5_000_000
CHUNK = 8192


class CapExceeded(RuntimeError):
    """Enumerating the requested Weyl group would exceed the element cap."""


@dataclass(frozen=True)
class CharPolyClass:
    cp_minus: IntPolynomial
    count: int


@dataclass(frozen=True)
class SignedCycleType:
    positive_cycles: tuple[int, ...]
    negative_cycles: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return sum(self.positive_cycles) + sum(self.negative_cycles)


def _canonical(buckets: dict[IntPolynomial, int]) -> list[CharPolyClass]:
    return [CharPolyClass(cp, n) for cp, n in sorted(buckets.items(), key=lambda kv: kv[0].coeffs)]


# -- classical types --------------------------------------------------------

def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _centralizer_order(parts: tuple[int, ...], weight: int = 1) -> int:
    """``prod_j (weight*j)^{m_j} m_j!`` over the multiplicities ``m_j`` of ``parts``."""
    z = 1
    for j, m in Counter(parts).items():
        z *= (weight * j) ** m * math.factorial(m)
    return z


def _one_minus(k: int) -> IntPolynomial:
    return IntPolynomial([1] + [0] * (k - 1) + [-1])


def _one_plus(k: int) -> IntPolynomial:
    return IntPolynomial([1] + [0] * (k - 1) + [1])


def signed_cycle_types(k: int) -> Iterator[SignedCycleType]:
    for a in range(k, -1, -1):
        for lam in partitions(a):
            for mu in partitions(k - a):
                yield SignedCycleType(lam, mu)


def signed_class_size(t: SignedCycleType) -> int:
    """Number of signed permutations of the given signed cycle type."""
    k = t.size
    return (2**k * math.factorial(k)) // (
        _centralizer_order(t.positive_cycles, 2) * _centralizer_order(t.negative_cycles, 2)
    )


def signed_char_poly(t: SignedCycleType) -> IntPolynomial:
    p = IntPolynomial([1])
    for c in t.positive_cycles:
        p = p * _one_minus(c)
    for c in t.negative_cycles:
        p = p * _one_plus(c)
    return p


def distribution_classical(factor: CartanFactor) -> list[CharPolyClass]:
    s, k = factor.series, factor.rank
    buckets: Counter = Counter()
    if s == "A":
        n = k + 1
        for lam in partitions(n):
            cp = IntPolynomial([1])
            for c in lam:
                cp = cp * _one_minus(c)
            cp = exact_div(cp, _one_minus(1))
            buckets[cp] += math.factorial(n) // _centralizer_order(lam)
    elif s in "BCD":
        for t in signed_cycle_types(k):
            # D_k keeps exactly the signed permutations with an even number of negative cycles
            if s == "D" and len(t.negative_cycles) % 2:
                continue
            buckets[signed_char_poly(t)] += signed_class_size(t)
    else:
        raise ValueError(f"{factor} is not a classical factor")
    out = _canonical(buckets)
    total = sum(c.count for c in out)
    if total != factor.weyl_order:
        raise AssertionError(f"{factor}: class sizes sum to {total}, expected {factor.weyl_order}")
    return out


# -- enumeration ------------------------------------------------------------

def iter_weyl_chunks(factor: CartanFactor, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """Yield every element of W(factor) exactly once, as stacks of int8 matrices.

    Elements are generated along the tree in which the parent of ``w != 1``
    is ``w s`` for the smallest right descent ``s`` of ``w``.  Column ``t``
    of a matrix is ``w(alpha_t)``, a root, so ``t`` is a right descent iff
    that column is negative.  Each element has a unique parent, so the walk
    needs no deduplication and only holds a bounded stack of chunks.
    """
    C = np.array(cartan_matrix(factor), dtype=np.int64)
    r = factor.rank
    stack = [np.eye(r, dtype=np.int8)[None]]
    while stack:
        mats = stack.pop()
        yield mats
        m64 = mats.astype(np.int64)
        colsum = m64.sum(axis=1)  # sign of each column root
        children = []
        for i in range(r):
            ci = colsum[:, i]
            new_sums = colsum - ci[:, None] * C[:, i][None, :]
            new_sums[:, i] = -ci
            keep = ci > 0
            if i:
                keep &= (new_sums[:, :i] > 0).all(axis=1)
            if not keep.any():
                continue
            sub = m64[keep]
            col_i = sub[:, :, i].copy()
            child = sub - col_i[:, :, None] * C[:, i][None, None, :]
            child[:, :, i] = -col_i
            children.append(child.astype(np.int8))
        if children:
            allc = np.concatenate(children)
            for start in range(0, len(allc), chunk):
                stack.append(allc[start:start + chunk])


def _power_traces(mats: np.ndarray) -> np.ndarray:
    """``tr(M^k)`` for ``k = 1..r``; these determine the characteristic polynomial."""
    m = mats.astype(np.int32)
    r = m.shape[1]
    out = np.empty((len(m), r), dtype=np.int64)
    p = m
    out[:, 0] = np.trace(p, axis1=1, axis2=2)
    for k in range(1, r):
        p = p @ m
        out[:, k] = np.trace(p, axis1=1, axis2=2)
    return out


def distribution_enumerated(factor: CartanFactor, element_cap: int = DEFAULT_ELEMENT_CAP) -> list[CharPolyClass]:
    """Enumerate W(factor) and bucket its elements by ``det(1 - q w)``.

    Elements are first grouped by the power traces ``tr(w^k)``, which fix the
    characteristic polynomial; ``char_poly_det`` then runs once per group on a
    representative matrix.
    """
    order = factor.weyl_order
    if order > element_cap:
        raise CapExceeded(
            f"W({factor}) has {order} elements, above the element cap {element_cap}; "
            f"raise the cap explicitly to enumerate it"
        )
    r = factor.rank
    base = 2 * r + 1
    weights = base ** np.arange(r, dtype=np.int64)
    counts: Counter = Counter()
    reps: dict[int, np.ndarray] = {}
    seen = 0
    for mats in iter_weyl_chunks(factor):
        seen += len(mats)
        keys = (_power_traces(mats) + r) @ weights
        uniq, first, cnt = np.unique(keys, return_index=True, return_counts=True)
        for key, idx, c in zip(uniq.tolist(), first.tolist(), cnt.tolist()):
            counts[key] += c
            if key not in reps:
                reps[key] = mats[idx].copy()
    if seen != order:
        raise AssertionError(f"enumerated {seen} elements of W({factor}), expected {order}")
    buckets: Counter = Counter()
    for key, c in counts.items():
        buckets[char_poly_det(reps[key].tolist())] += c
    return _canonical(buckets)


# -- products ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _factor_distribution(factor: CartanFactor) -> tuple[CharPolyClass, ...]:
    # callers have already applied the element cap
    if factor.series in "ABCD":
        return tuple(distribution_classical(factor))
    return tuple(distribution_enumerated(factor, factor.weyl_order))


def convolve(a: list[CharPolyClass], b: list[CharPolyClass]) -> list[CharPolyClass]:
    buckets: Counter = Counter()
    for x in a:
        for y in b:
            buckets[x.cp_minus * y.cp_minus] += x.count * y.count
    return _canonical(buckets)


def distribution(spec: GroupSpec, element_cap: int = DEFAULT_ELEMENT_CAP) -> list[CharPolyClass]:
    """Distribution of ``det(1 - q w)`` over W acting on the full rank-r torus."""
    for f in spec.factors:
        if f.series in "EFG" and f.weyl_order > element_cap:
            raise CapExceeded(
                f"W({f}) in {spec} has {f.weyl_order} elements, above the element cap "
                f"{element_cap}; raise the cap explicitly to enumerate it"
            )
    out = [CharPolyClass(IntPolynomial([1, -1]) ** spec.central_rank, 1)]
    for f in spec.factors:
        out = convolve(out, list(_factor_distribution(f)))
    return out


# -- serialisation ----------------------------------------------------------

def validate_distribution(spec: GroupSpec, classes: list[CharPolyClass]) -> None:
    total = 0
    for c in classes:
        cp = c.cp_minus
        if c.count <= 0:
            raise ValueError(f"{spec}: nonpositive count {c.count}")
        if cp[0] != 1 or cp.degree != spec.rank or abs(cp[spec.rank]) != 1:
            raise ValueError(f"{spec}: {cp} is not det(1 - q w) for a rank-{spec.rank} Weyl element")
        total += c.count
    if total != spec.weyl_order:
        raise ValueError(f"{spec}: counts sum to {total}, expected |W| = {spec.weyl_order}")


def distribution_to_data(classes: list[CharPolyClass]) -> list[dict]:
    return [{"cp": list(c.cp_minus.coeffs), "count": c.count} for c in classes]


def distribution_from_data(spec: GroupSpec, data) -> list[CharPolyClass]:
    if not isinstance(data, list):
        raise ValueError(f"{spec}: distribution must be a JSON array")
    buckets: Counter = Counter()
    for item in data:
        try:
            cp, count = item["cp"], item["count"]
        except (TypeError, KeyError):
            raise ValueError(f"{spec}: entries need 'cp' and 'count'") from None
        if not isinstance(count, int) or not all(isinstance(x, int) for x in cp):
            raise ValueError(f"{spec}: non-integer data in distribution")
        buckets[IntPolynomial(cp)] += count
    out = _canonical(buckets)
    validate_distribution(spec, out)
    return out


def dump_distribution(classes: list[CharPolyClass]) -> str:
    return json.dumps(distribution_to_data(classes), separators=(",", ":"))


def load_distribution(spec: GroupSpec, text: str) -> list[CharPolyClass]:
    return distribution_from_data(spec, json.loads(text))
