from fractions import Fraction as F

import pytest

from toricsing import wblowup
from toricsing.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalConsistencyError,
    InvalidWeight,
    NonpositiveEpsilon,
    ZeroVector,
)
from toricsing.wblowup import GENERATOR, alpha, decompose, is_elc, lct_hyperplane, mld, pullback_mult, relative_class


def test_decompose_reference_point():
    dec = decompose((1, 1, 2), (10, 11, 19))
    assert (dec.j, dec.a, dec.b, dec.value) == (2, F(1, 11), (F(1, 11), F(3, 11)), F(5, 11))
    assert dec.recompose((10, 11, 19)) == (1, 1, 2)


def test_decompose_ray_and_basis():
    dec = decompose((2, 3), (2, 3))
    assert dec.a == 1 and all(b == 0 for b in dec.b) and dec.value == 1
    dec = decompose((1, 0), (2, 3))
    assert (dec.j, dec.a, dec.b, dec.value) == (2, 0, (1,), 1)


def test_alpha_values():
    assert alpha((1, 1, 2), (10, 11, 19)) == F(5, 11)
    # frozen from oracle.alpha_oracle (both dropped indices tried)
    assert alpha((1, 1), (2, 3)) == F(2, 3)
    assert alpha((3, 3, 6), (10, 11, 19)) == 3 * F(5, 11)


def test_decompose_errors():
    with pytest.raises(ZeroVector):
        decompose((0, 0), (2, 3))
    with pytest.raises(DimensionMismatch):
        decompose((1, 1, 1), (2, 3))
    with pytest.raises(InvalidWeight):
        decompose((1, 1), (0, 3))


@pytest.mark.parametrize("n, value, witness", [
    ((2, 3), F(2, 3), (1, 1)),
    ((5, 4), F(2, 5), (1, 1)),
    ((10, 11, 19), F(5, 11), (1, 1, 2)),
])
def test_mld_with_witness(backend, n, value, witness):
    report = mld(n)
    assert report.value == value
    assert report.witness == witness
    assert alpha(report.witness, n) == value


@pytest.mark.parametrize("n", [(1, 7), (1, 1), (20, 57, 133, 210), (32, 41, 71, 102)])
def test_mld_one(backend, n):
    assert mld(n).value == 1


def test_generator_marker():
    report = mld((1, 1))
    assert report.at_generator and report.witness == GENERATOR
    assert report.decomposition.a == 1
    assert mld((1, 7)).witness == (1, 1)  # a box point of value exactly 1 exists


def test_is_elc():
    assert is_elc((2, 3), F(2, 3))
    assert not is_elc((2, 3), F(7, 10))  # mld = 2/3 by box enumeration
    for k in range(1, 12):
        assert is_elc((1, k), 1)
    with pytest.raises(NonpositiveEpsilon):
        is_elc((2, 3), 0)


def test_lct_hyperplane():
    # frozen from oracle.lct_bruteforce
    assert lct_hyperplane((2, 3), 2) == F(1, 3)
    assert lct_hyperplane((1, 1, 1), 2) == 1
    assert [lct_hyperplane((k, k + 1, k * (k + 1)), 3) for k in (1, 2, 3)] == [F(1, 2), F(1, 6), F(1, 12)]
    with pytest.raises(IndexOutOfRange):
        lct_hyperplane((2, 3), 3)
    with pytest.raises(IndexOutOfRange):
        lct_hyperplane((2, 3), 0)


@pytest.mark.parametrize("k", range(1, 6))
def test_counter_example_family(k):
    n = (k, k + 1, k * (k + 1))
    assert [pullback_mult(n, i) for i in (1, 2, 3)] == list(n)
    assert relative_class(0, (-(k + 1), 0, 1), n) == 0
    assert relative_class(0, (0, -k, 1), n) == 0
    assert relative_class(1, (0, 0, 0), n) == 1


def test_relative_class_errors():
    with pytest.raises(DimensionMismatch):
        relative_class(0, (1, 2), (2, 3, 6))


def test_pullback_mult_matches_decomposition():
    n = (4, 7, 9)
    dec = decompose(n, n)
    assert dec.a == 1 and dec.b == (0, 0)
    assert [pullback_mult(n, i) for i in (1, 2, 3)] == [4, 7, 9]


def test_box_points_reference():
    points = list(wblowup.box_points((2, 3)))
    assert [(j, k) for j, k, _, _ in points] == [(1, 1), (2, 1), (2, 2)]
    assert min(dec.value for *_, dec in points) == F(2, 3)
    # each cone contributes index - 1 nonzero points
    n = (3, 4, 6)
    assert len(list(wblowup.box_points(n))) == sum(x - 1 for x in n)


def test_two_three_five_discrepancy_is_flagged():
    # (n, 2n-1) at n = 3: the listed lower bound 2/3 fails at (1, 1).
    assert mld((3, 5)).value == F(3, 5)
    assert alpha((1, 1), (3, 5)) == F(3, 5) < F(2, 3)


def test_kernel_inconsistency_is_an_error(monkeypatch):
    from toricsing import kernels
    monkeypatch.setattr(kernels, "box_min_blowup", lambda n: (1, 7, 1, 1))
    with pytest.raises(InternalConsistencyError):
        mld((2, 3))
