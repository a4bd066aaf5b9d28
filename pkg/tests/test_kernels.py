import itertools
import math
import random
from fractions import Fraction

import pytest

from toricsing import _kernels_py, fibfan, kernels, wblowup


def _blowup_grid():
    for d in (2, 3):
        for n in itertools.product(range(1, 9), repeat=d):
            if math.gcd(*n) == 1:
                yield n


def _fibration_grid():
    for d in (2, 3):
        for n1 in range(1, 8):
            for tail in itertools.product(range(-6, 7), repeat=d - 1):
                if math.gcd(n1, *tail) == 1:
                    yield (n1,) + tail


needs_compiled = pytest.mark.skipif(not kernels.COMPILED_AVAILABLE, reason="compiled kernels not built")


@needs_compiled
def test_twins_agree_blowup():
    from toricsing import _kernels
    for n in _blowup_grid():
        assert _kernels.box_min_blowup(n) == _kernels_py.box_min_blowup(n), n
    rng = random.Random(3)
    for _ in range(300):
        d = rng.randint(2, 5)
        n = tuple(rng.randint(1, 60) for _ in range(d))
        if math.gcd(*n) == 1:
            assert _kernels.box_min_blowup(n) == _kernels_py.box_min_blowup(n), n


@needs_compiled
def test_twins_agree_fibration():
    from toricsing import _kernels
    for n in _fibration_grid():
        assert _kernels.box_min_fibration(n) == _kernels_py.box_min_fibration(n), n
    rng = random.Random(4)
    for _ in range(300):
        d = rng.randint(2, 5)
        n = (rng.randint(1, 40),) + tuple(rng.randint(-40, 40) for _ in range(d - 1))
        if math.gcd(*n) == 1:
            assert _kernels.box_min_fibration(n) == _kernels_py.box_min_fibration(n), n


def test_kernel_matches_reference_box_walk():
    for n in _blowup_grid():
        best = min(((dec.value, j, k) for j, k, _, dec in wblowup.box_points(n)), default=None)
        got = _kernels_py.box_min_blowup(n)
        if best is None:
            assert got is None
        else:
            num, den, j, k = got
            assert (Fraction(num, den), j, k) == best, n


def test_large_entries_route_to_python(backend):
    # the fibration box only depends on n_i mod n_1, so a huge tail is cheap
    huge = (3, 2**40 + 1, -(2**45) + 1)
    assert not kernels._fits(huge)
    small = (3,) + tuple(x % 3 for x in huge[1:])
    assert fibfan.mld_prime(huge).value == fibfan.mld_prime(small).value


def test_set_backend_validation():
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")
