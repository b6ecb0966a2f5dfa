"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Every polynomial in the package lives in a single variable ``q`` and is
stored as an immutable tuple of Python ints in ascending powers with no
trailing zeros.  Rational numbers never appear: divisions are checked to be
exact and raise :class:`NonExactDivision` otherwise.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IntPolynomial",
    "NonExactDivision",
    "add",
    "mul",
    "pow",
    "exact_div",
    "scalar_exact_div",
    "substitute_q_squared",
    "negate_q",
    "eval_int",
    "reverse",
    "char_poly_det",
    "char_poly_det_batch",
    "series_inverse",
]


class NonExactDivision(ArithmeticError):
    """A division that theory says is exact left a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPolynomial:
    """Polynomial in ``q`` with integer coefficients, lowest power first.

    >>> p = IntPolynomial([1, 1])
    >>> p * IntPolynomial([1, -1])
    IntPolynomial([1, 0, -1])
    >>> str(p ** 3)
    '1 + 3*q + 3*q^2 + q^3'
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c: int, power: int) -> "IntPolynomial":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [c])

    @property
    def degree(self) -> float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative power")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(("IntPolynomial", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return to_text(self)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        return pow(self, k)

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def sort_key(self) -> tuple[int, ...]:
        return self.coeffs


def _coerce(x) -> IntPolynomial | None:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return None


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


def add(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(out)


def mul(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, r.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return IntPolynomial(out)


def pow(p: IntPolynomial, k: int) -> IntPolynomial:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def divmod_poly(p: IntPolynomial, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division over the integers; the leading coefficient of ``d`` must divide."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dc = d.coeffs
    lead = dc[-1]
    dd = len(dc) - 1
    if len(rem) - 1 < dd:
        return ZERO, p
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NonExactDivision(f"leading coefficient {lead} does not divide {c}")
        quot[k - dd] = qc
        for j, x in enumerate(dc):
            rem[k - dd + j] -= qc * x
    return IntPolynomial(quot), IntPolynomial(rem)


def exact_div(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """Return ``p / d``, raising :class:`NonExactDivision` on a nonzero remainder."""
    q, r = divmod_poly(p, d)
    if not r.is_zero():
        raise NonExactDivision(f"({p}) / ({d}) leaves remainder {r}")
    return q


def scalar_exact_div(p: IntPolynomial, m: int) -> IntPolynomial:
    if m <= 0:
        raise ValueError("divisor must be a positive integer")
    out = []
    for c in p.coeffs:
        qc, r = divmod(c, m)
        if r:
            raise NonExactDivision(f"coefficient {c} of {p} is not divisible by {m}")
        out.append(qc)
    return IntPolynomial(out)


def substitute_q_squared(p: IntPolynomial) -> IntPolynomial:
    out = [0] * (2 * len(p.coeffs))
    out[::2] = p.coeffs
    return IntPolynomial(out)


def negate_q(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(-c if i & 1 else c for i, c in enumerate(p.coeffs))


def eval_int(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def reverse(p: IntPolynomial, D: int) -> IntPolynomial:
    """``q^D * p(1/q)``; ``D`` must be at least the degree of ``p``."""
    if p.degree > D:
        raise ValueError(f"ambient degree {D} is below deg p = {p.degree}")
    padded = list(p.coeffs) + [0] * (D + 1 - len(p.coeffs))
    return IntPolynomial(reversed(padded))


def char_poly_det(M: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(I - q M)`` for a square integer matrix.

    Uses the Faddeev-LeVerrier recursion; every division by ``k`` is exact
    over the integers, so no fractions are formed.
    """
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    coeffs = [1]
    # Mk = A * M_{k-1} + c_{k-1} I with M_0 = 0
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        AM = _matmul(A, Mk)
        for i in range(n):
            AM[i][i] += c_prev
        Mk = AM
        AMk = _matmul(A, Mk)
        tr = sum(AMk[i][i] for i in range(n))
        ck, r = divmod(-tr, k)
        if r:
            raise NonExactDivision("trace recursion produced a non-integer coefficient")
        coeffs.append(ck)
    return IntPolynomial(coeffs)


def _matmul(A, B):
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def char_poly_det_batch(mats: np.ndarray) -> np.ndarray:
    """Vectorised ``det(I - q M)`` coefficients for a stack of integer matrices.

    Returns an int64 array of shape ``(b, n + 1)``.  Exact as long as the
    intermediate values fit in int64, which is checked.
    """
    mats = np.asarray(mats, dtype=np.int64)
    b, n, _ = mats.shape
    out = np.zeros((b, n + 1), dtype=np.int64)
    out[:, 0] = 1
    eye = np.eye(n, dtype=np.int64)
    Mk = np.zeros_like(mats)
    for k in range(1, n + 1):
        Mk = mats @ Mk + out[:, k - 1, None, None] * eye
        if np.abs(Mk).max(initial=0) > 2**40:
            raise OverflowError("batched characteristic polynomial left the exact int64 range")
        tr = -np.trace(mats @ Mk, axis1=1, axis2=2)
        if np.any(tr % k):
            raise NonExactDivision("trace recursion produced a non-integer coefficient")
        out[:, k] = tr // k
    return out


def series_inverse(p: IntPolynomial, order: int) -> list[int]:
    """Coefficients of ``1/p`` up to and including ``q^order``; needs ``p(0) = ±1``."""
    c0 = p[0]
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit")
    out = [0] * (order + 1)
    for k in range(order + 1):
        s = 1 if k == 0 else 0
        for j in range(1, min(k, len(p) - 1) + 1):
            s -= p[j] * out[k - j]
        out[k] = s * c0
    return out


# -- text forms -------------------------------------------------------------

def to_text(p: IntPolynomial, var: str = "q") -> str:
    """Render as ``1 + q^2 + 2*q^3`` (ascending powers)."""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def to_latex(p: IntPolynomial, var: str = "q") -> str:
    """Render as ``1+q^{2}+2q^{3}``."""
    out = ""
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{{{k}}}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def from_text(text: str, var: str = "q") -> IntPolynomial:
    """Parse the output of :func:`to_text` (and mildly looser input)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, term in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        c, v, e = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        coef = int(c) if c is not None else 1
        power = 0 if v is None else (int(e) if e is not None else 1)
        coeffs[power] = coeffs.get(power, 0) + (-coef if sign == "-" else coef)
    if "".join(f"{a}{b}" for a, b in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse {text!r}")
    top = max(coeffs)
    return IntPolynomial(coeffs.get(k, 0) for k in range(top + 1))


def to_json(p: IntPolynomial) -> str:
    return json.dumps(list(p.coeffs))


def from_json(text: str) -> IntPolynomial:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
        raise ValueError("coefficient array must be a JSON list of integers")
    return IntPolynomial(data)
