from collections import Counter

import numpy as np
import pytest

from commcohom.commvar import poincare_polynomial
from commcohom.oracle import enumerate_weyl, molien_degrees_check, poincare_brute
from commcohom.polyalg import IntPolynomial as P, char_poly_det
from commcohom.rootdata import CartanFactor, GroupSpec, parse_spec
from commcohom.weylclasses import CapExceeded, distribution


def test_enumerate_small():
    ws = enumerate_weyl(parse_spec("A1"))
    assert sorted(ws.matrices.ravel().tolist()) == [-1, 1]
    assert len(enumerate_weyl(parse_spec("A2"))) == 6
    assert len(enumerate_weyl(parse_spec("B2"))) == 8
    ws = enumerate_weyl(parse_spec("A1xT2"))
    assert len(ws) == 2 and ws.matrices.shape == (2, 3, 3)
    assert (ws.matrices[:, 1:, 1:] == np.eye(2)).all()


@pytest.mark.parametrize("text", ["A2", "B3", "G2", "A1xB2xT1"])
def test_closed_under_multiplication(text):
    mats = enumerate_weyl(parse_spec(text)).matrices
    keys = {m.tobytes() for m in mats}
    assert np.eye(mats.shape[1], dtype=np.int64).tobytes() in keys
    for a in mats[:8]:
        for b in mats:
            assert (a @ b).tobytes() in keys


def test_brute_examples():
    assert poincare_brute(parse_spec("A1"), 2) == P([1, 0, 1, 2])
    assert poincare_brute(parse_spec("A2"), 1) == P([1, 0, 0, 1, 0, 1, 0, 0, 1])
    assert poincare_brute(parse_spec("T1"), 5) == P([1, 1]) ** 5


def test_molien_examples():
    assert molien_degrees_check(parse_spec("A2"))
    assert molien_degrees_check(parse_spec("G2"))
    assert molien_degrees_check(parse_spec("T3"))


def test_molien_detects_wrong_degrees(monkeypatch):
    from commcohom import oracle

    monkeypatch.setattr(oracle, "degrees", lambda spec: [2, 4])  # A2 really has [2, 3]
    assert not oracle.molien_degrees_check(parse_spec("A2"))


@pytest.mark.parametrize("text", ["A3", "B3", "C3", "D4", "G2", "F4", "A2xG2", "B2xT2"])
def test_bucketing_reproduces_distribution(text):
    spec = parse_spec(text)
    counts = Counter(char_poly_det(M.tolist()) for M in enumerate_weyl(spec).matrices)
    assert sorted((cp.coeffs, n) for cp, n in counts.items()) == [
        (c.cp_minus.coeffs, c.count) for c in distribution(spec)
    ]


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_weyl(parse_spec("E6"))
    with pytest.raises(CapExceeded):
        poincare_brute(parse_spec("A4"), 1, cap=100)
