from fractions import Fraction

import pytest

from kmweights.cartan import parse_gcm
from kmweights.errors import FiniteType, NotFiniteType, WrongRank
from kmweights.verify import (
    check_integrability_invariants,
    verify_denominator_bases,
    verify_rank2_macdonald,
    verify_wkw_vs_weights,
)
from kmweights.weights import HighestWeight

A1 = parse_gcm([[2]])
A2 = parse_gcm([[2, -1], [-1, 2]])
B2 = parse_gcm([[2, -1], [-2, 2]])
G2 = parse_gcm([[2, -1], [-3, 2]])
AFF = parse_gcm([[2, -2], [-2, 2]])


def test_denominator_a1_hand_check():
    r = verify_denominator_bases(A1)
    assert r.passed
    assert r.details["bases"] == 2
    assert r.details["roots"] == 2


def test_denominator_a2():
    r = verify_denominator_bases(A2)
    assert r.passed
    assert r.details["bases"] == 6


def test_denominator_g2():
    r = verify_denominator_bases(G2)
    assert r.passed
    assert r.details["bases"] == 12
    assert r.details["roots"] == 12


def test_denominator_rejects_affine():
    with pytest.raises(NotFiniteType):
        verify_denominator_bases(AFF)


def test_macdonald_affine_sl2():
    r = verify_rank2_macdonald(AFF, 8)
    assert r.passed
    coeffs = {tuple(t["offset"]): t["coefficient"] for t in r.details["rhs"]}
    assert coeffs == {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1, (4, 4): 1}


def test_macdonald_hyperbolic():
    assert verify_rank2_macdonald(parse_gcm([[2, -3], [-3, 2]]), 6).passed


def test_macdonald_rejects_finite_type():
    with pytest.raises(FiniteType):
        verify_rank2_macdonald(A2, 6)


def test_macdonald_rejects_wrong_rank():
    with pytest.raises(WrongRank):
        verify_rank2_macdonald(A1, 6)


def test_wkw_vs_weights_sl2():
    r = verify_wkw_vs_weights(HighestWeight.of([3]), A1, 8)
    assert r.passed and not r.expected_failure


def test_wkw_vs_weights_trivial_affine_fails_as_expected():
    r = verify_wkw_vs_weights(HighestWeight.of([0, 0]), AFF, 8)
    assert not r.passed
    assert r.expected_failure
    disc = {tuple(t["offset"]): t["coefficient"] for t in r.details["discrepancy"]}
    assert disc == {(k, k): 1 for k in range(1, 5)}


def test_integrability_partial():
    r = check_integrability_invariants(HighestWeight.of([1, Fraction(-7, 2)]), A2, 8)
    assert r.passed
    assert r.details["preserving"] == [0]


def test_integrability_dominant_integral():
    r = check_integrability_invariants(HighestWeight.of([1, 2]), A2, 8)
    assert r.passed
    assert r.details["preserving"] == [0, 1]


def test_integrability_verma():
    r = check_integrability_invariants(HighestWeight.of([Fraction(-3, 2)]), A1, 8)
    assert r.passed
    assert r.details["preserving"] == []
