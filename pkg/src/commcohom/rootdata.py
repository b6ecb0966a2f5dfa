"""Root data of connected compact reductive groups.

A group is specified up to isogeny by its simple Cartan factors plus the rank
of its central torus, written as a spec string such as ``"A2xB3xT1"``.
Isogeny data is deliberately absent: rational cohomology only sees the root
system and the central rank.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "CartanFactor",
    "GroupSpec",
    "SpecError",
    "parse_spec",
    "degrees",
    "cartan_matrix",
    "simple_reflection_matrices",
    "positive_roots",
    "positive_root_count",
]

SERIES = "ABCDEFG"


class SpecError(ValueError):
    """Malformed or unsupported group spec string."""


@dataclass(frozen=True, order=True)
class CartanFactor:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in SERIES:
            raise SpecError(f"unknown Cartan series {s!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 3,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[s]
        if not ok:
            raise SpecError(f"unsupported factor {s}{r}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def degrees(self) -> tuple[int, ...]:
        return _factor_degrees(self)

    @property
    def weyl_order(self) -> int:
        return math.prod(self.degrees)

    @property
    def n_positive_roots(self) -> int:
        return sum(d - 1 for d in self.degrees)


def _factor_degrees(f: CartanFactor) -> tuple[int, ...]:
    k = f.rank
    if f.series == "A":
        return tuple(range(2, k + 2))
    if f.series in "BC":
        return tuple(range(2, 2 * k + 1, 2))
    if f.series == "D":
        return tuple(sorted(list(range(2, 2 * k - 1, 2)) + [k]))
    return _EXCEPTIONAL_DEGREES[str(f)]


_EXCEPTIONAL_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


@dataclass(frozen=True)
class GroupSpec:
    """Simple factors in canonical order plus the central torus rank."""

    factors: tuple[CartanFactor, ...] = ()
    central_rank: int = 0

    def __post_init__(self):
        if self.central_rank < 0:
            raise SpecError("central rank must be nonnegative")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=_factor_sort_key)))

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) + self.central_rank

    @property
    def semisimple_rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def weyl_order(self) -> int:
        return math.prod(f.weyl_order for f in self.factors)

    @property
    def n_positive_roots(self) -> int:
        return sum(f.n_positive_roots for f in self.factors)

    @property
    def dim_group(self) -> int:
        return self.rank + 2 * self.n_positive_roots

    def __mul__(self, other: "GroupSpec") -> "GroupSpec":
        return GroupSpec(self.factors + other.factors, self.central_rank + other.central_rank)

    def __str__(self) -> str:
        parts = [str(f) for f in self.factors]
        if self.central_rank or not parts:
            parts.append(f"T{self.central_rank}")
        return "x".join(parts)


def _factor_sort_key(f: CartanFactor):
    return (SERIES.index(f.series), -f.rank)


_ALIASES = {
    ("B", 1): [("A", 1)],
    ("C", 1): [("A", 1)],
    ("C", 2): [("B", 2)],
    ("D", 2): [("A", 1), ("A", 1)],
    ("D", 3): [("A", 3)],
}

_TOKEN = re.compile(r"^([A-GT])(\d+)$")


def parse_spec(text: str) -> GroupSpec:
    """Parse ``FACTOR ("x" FACTOR)*`` into a canonical :class:`GroupSpec`.

    >>> str(parse_spec("c2xt1"))
    'B2xT1'
    >>> str(parse_spec("D3xA1"))
    'A3xA1'
    """
    if not isinstance(text, str) or not text.strip():
        raise SpecError("empty group spec")
    factors: list[CartanFactor] = []
    central = 0
    for raw in text.strip().upper().split("X"):
        tok = raw.strip()
        m = _TOKEN.match(tok)
        if not m:
            raise SpecError(f"malformed factor {raw!r} in spec {text!r}")
        series, rank = m.group(1), int(m.group(2))
        if series == "T":
            central += rank
            continue
        if rank < 1:
            raise SpecError(f"unsupported factor {tok} in spec {text!r}")
        for s, r in _ALIASES.get((series, rank), [(series, rank)]):
            try:
                factors.append(CartanFactor(s, r))
            except SpecError as exc:
                raise SpecError(f"{exc} in spec {text!r}") from None
    return GroupSpec(tuple(factors), central)


def degrees(spec: GroupSpec) -> list[int]:
    """Fundamental degrees, with one ``1`` per central torus dimension."""
    out = [1] * spec.central_rank
    for f in spec.factors:
        out.extend(f.degrees)
    return sorted(out)


def semisimple_degrees(spec: GroupSpec) -> list[int]:
    return sorted(d for f in spec.factors for d in f.degrees)


@lru_cache(maxsize=None)
def cartan_matrix(factor: CartanFactor) -> tuple[tuple[int, ...], ...]:
    """Entry ``[j][i]`` is the pairing of ``alpha_j`` with the coroot of ``alpha_i``.

    Bourbaki numbering.  A bond listed as ``(long, short, m)`` puts ``-m`` at
    ``[long][short]`` and ``-1`` at ``[short][long]``.
    """
    k = factor.rank
    s = factor.series
    bonds: list[tuple[int, int, int]] = []
    if s in "ABC":
        bonds = [(i, i + 1, 1) for i in range(k - 1)]
        if s == "B":
            bonds[-1] = (k - 2, k - 1, 2)
        elif s == "C":
            bonds[-1] = (k - 1, k - 2, 2)
    elif s == "D":
        bonds = [(i, i + 1, 1) for i in range(k - 2)] + [(k - 3, k - 1, 1)]
    elif s == "E":
        bonds = [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, k - 1)]
    elif s == "F":
        bonds = [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    elif s == "G":
        bonds = [(1, 0, 3)]
    C = [[2 if i == j else 0 for j in range(k)] for i in range(k)]
    for long_, short, m in bonds:
        C[long_][short] = -m
        C[short][long_] = -1
    return tuple(tuple(row) for row in C)


def simple_reflection_matrices(factor: CartanFactor) -> list[list[list[int]]]:
    """Simple reflections in the simple-root basis.

    Column ``j`` of ``s_i`` is the image of ``alpha_j``, namely
    ``alpha_j - C[j][i] alpha_i``.
    """
    C = cartan_matrix(factor)
    k = factor.rank
    mats = []
    for i in range(k):
        S = [[int(r == c) for c in range(k)] for r in range(k)]
        for j in range(k):
            S[i][j] -= C[j][i]
        mats.append(S)
    return mats


def reflect(v: tuple[int, ...], i: int, C) -> tuple[int, ...]:
    pairing = sum(v[j] * C[j][i] for j in range(len(v)))
    if pairing == 0:
        return v
    out = list(v)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(factor: CartanFactor) -> tuple[tuple[int, ...], ...]:
    """Positive roots in the simple-root basis, by closing the simple roots under reflections."""
    C = cartan_matrix(factor)
    k = factor.rank
    simple = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(k):
                w = reflect(v, i, C)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(v for v in seen if all(c >= 0 for c in v)))


def positive_root_count(factor: CartanFactor) -> int:
    return len(positive_roots(factor))
