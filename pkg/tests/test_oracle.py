from fractions import Fraction as F

import pytest

from toricsing import oracle
from toricsing.errors import BoundTooSmall, InternalConsistencyError
from toricsing.wblowup import mld


def test_mld_bruteforce_examples():
    assert oracle.mld_bruteforce((2, 3), 3).value == F(2, 3)
    assert oracle.mld_bruteforce((1, 1), 1).value == 1
    assert oracle.mld_bruteforce((10, 11, 19), 19).value == mld((10, 11, 19)).value


def test_mld_prime_bruteforce_examples():
    assert oracle.mld_prime_bruteforce((3, 1), 5).value == F(2, 3)
    assert oracle.mld_prime_bruteforce((1, 4), 6).value == 1
    assert oracle.mld_prime_bruteforce((2, 3), 7).value == 1


def test_lct_bruteforce_examples():
    assert oracle.lct_bruteforce((2, 3), 2, 6) == F(1, 3)
    assert oracle.lct_bruteforce((1, 1, 1), 2, 3) == 1
    assert oracle.lct_bruteforce((5, 4), 1, 10) == F(1, 5)


def test_bounds_enforced():
    with pytest.raises(BoundTooSmall):
        oracle.mld_bruteforce((2, 3), 2)
    with pytest.raises(BoundTooSmall):
        oracle.mld_prime_bruteforce((3, 1), 4)
    with pytest.raises(BoundTooSmall):
        oracle.lct_bruteforce((2, 3), 1, 2)


@pytest.mark.parametrize("n", [(2, 3), (3, 4, 5), (1, 2, 2)])
def test_bound_stability(n):
    base = oracle.mld_bruteforce(n, max(n)).value
    assert oracle.mld_bruteforce(n, max(n) + 2).value == base


@pytest.mark.parametrize("n", [(3, 1), (2, -1, 3), (4, 1, 1)])
def test_prime_bound_stability(n):
    bound = max(abs(x) for x in n) + len(n)
    assert oracle.mld_prime_bruteforce(n, bound).value == oracle.mld_prime_bruteforce(n, bound + 2).value


def test_oracle_witness_recomposes():
    report = oracle.mld_bruteforce((5, 4), 5)
    assert report.value == F(2, 5)
    assert report.decomposition.recompose((5, 4)) == report.witness
    report = oracle.mld_prime_bruteforce((3, 1), 5)
    assert report.decomposition.recompose((3, 1)) == report.witness


def test_divisor_oracles():
    assert [oracle.pullback_mult_oracle((2, 3, 6), i) for i in (1, 2, 3)] == [2, 3, 6]
    assert oracle.fiber_multiplicity_oracle((7, -2, 3)) == 7
    assert oracle.relative_class_oracle(0, (-3, 0, 1), (2, 3, 6)) == 0
    assert oracle.relative_class_oracle(2, (1, 1, 0), (2, 3, 6)) == -3


def test_relative_class_oracle_length_check():
    with pytest.raises(InternalConsistencyError):
        oracle.relative_class_oracle(0, (1, 1), (2, 3, 6))
