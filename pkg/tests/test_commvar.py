import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commcohom.commvar import (
    closed_form_n1,
    euler_characteristic,
    is_palindromic,
    poincare_from_classes,
    poincare_polynomial,
    total_betti,
)
from commcohom.polyalg import IntPolynomial as P
from commcohom.rootdata import parse_spec
from commcohom.weylclasses import CapExceeded, distribution

# values frozen from poincare_brute (per-element summation over W)
KNOWN = [
    ("A1", 0, [1]),
    ("A1", 1, [1, 0, 0, 1]),
    ("A1", 2, [1, 0, 1, 2]),
    ("A1", 3, [1, 0, 3, 3, 0, 1]),
    ("T1", 2, [1, 2, 1]),
    ("A2", 1, [1, 0, 0, 1, 0, 1, 0, 0, 1]),
    ("A2", 2, [1, 0, 1, 2, 2, 4, 1, 2, 3]),
    ("A1xA1", 2, [1, 0, 2, 4, 1, 4, 4]),
    ("G2", 2, [1, 0, 1, 2, 1, 2, 1, 0, 0, 0, 1, 2, 0, 2, 3]),
]


@pytest.mark.parametrize("text, n, coeffs", KNOWN)
def test_known_values(text, n, coeffs):
    assert poincare_polynomial(parse_spec(text), n).poincare == P(coeffs)


def test_closed_form_examples():
    assert closed_form_n1(parse_spec("A1")) == P([1, 0, 0, 1])
    assert closed_form_n1(parse_spec("A2")) == P([1, 0, 0, 1, 0, 1, 0, 0, 1])
    assert closed_form_n1(parse_spec("T2")) == P([1, 2, 1])


def test_derived_fields():
    r = poincare_polynomial(parse_spec("A1"), 2)
    assert r.betti == (1, 0, 1, 2)
    assert euler_characteristic(r) == r.euler == 0
    assert total_betti(r) == r.total == 4
    assert r.manifold_dim == 4
    r3 = poincare_polynomial(parse_spec("A1"), 3)
    assert r3.manifold_dim == 5 and is_palindromic(r3)
    assert not is_palindromic(r)


def test_rejects_negative_n():
    with pytest.raises(ValueError):
        poincare_polynomial(parse_spec("A1"), -1)


def test_cap_propagates():
    with pytest.raises(CapExceeded):
        poincare_polynomial(parse_spec("E8"), 1)
    with pytest.raises(CapExceeded):
        poincare_polynomial(parse_spec("F4"), 1, element_cap=10)


def test_explicit_classes_match():
    spec = parse_spec("B3xT1")
    classes = distribution(spec)
    for n in range(4):
        assert poincare_polynomial(spec, n, classes=classes) == poincare_polynomial(spec, n)


SPEC_POOL = ["A1", "A2", "A3", "B2", "C3", "B3", "D4", "G2", "T1", "A1xT1", "A2xA1", "B2xG2", "F4"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPEC_POOL), st.integers(0, 4))
def test_laws(text, n):
    spec = parse_spec(text)
    r = poincare_polynomial(spec, n)
    P_ = r.poincare
    assert all(b >= 0 for b in r.betti) and r.betti[0] == 1
    assert r.total == 2 ** (spec.rank * n)
    assert r.euler == (1 if n == 0 else 0)
    if n == 0:
        assert P_ == P([1])
    if n == 1:
        assert P_ == closed_form_n1(spec)
    if n >= 1:
        assert P_.degree <= r.manifold_dim
    if n % 2 == 1:
        assert is_palindromic(r) and P_[r.manifold_dim] == 1
    elif n >= 2 and spec.weyl_order > 1:
        assert P_.degree < r.manifold_dim


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SPEC_POOL[:9]), st.sampled_from(SPEC_POOL[:9]), st.integers(0, 3))
def test_multiplicative(a, b, n):
    sa, sb = parse_spec(a), parse_spec(b)
    assert poincare_polynomial(sa * sb, n).poincare == (
        poincare_polynomial(sa, n).poincare * poincare_polynomial(sb, n).poincare
    )


def test_torus_only():
    for n in range(5):
        assert poincare_polynomial(parse_spec("T3"), n).poincare == P([1, 1]) ** (3 * n)


def test_poincare_from_classes_negative_n():
    with pytest.raises(ValueError):
        poincare_from_classes(parse_spec("A1"), -2, distribution(parse_spec("A1")))
