import itertools
import random
from fractions import Fraction as F

import pytest

from toricsing import fibfan
from toricsing.errors import InvalidWeight, NonpositiveEpsilon, ToricError, ZeroVector
from toricsing.fibfan import alpha_prime, build_fan, fiber_multiplicity, is_elc_prime, mld_prime
from toricsing.lattice import det_exact, solve_exact


def test_build_fan_d2():
    fan = build_fan((3, 1))
    assert fan.maximal_cones == {0: ((3, 1), (0, 1)), 2: ((3, 1), (0, -1))}
    assert {abs(x) for x in fan.determinants.values()} == {3}
    assert build_fan((2, 3)).determinants.keys() == {0, 2}
    assert all(abs(x) == 2 for x in build_fan((2, 3)).determinants.values())


def test_build_fan_unit_index():
    fan = build_fan((1, 4, -2, 7))
    assert len(fan.maximal_cones) == 4
    assert all(abs(x) == 1 for x in fan.determinants.values())


def test_boundary_cones_are_unimodular():
    for d in range(2, 6):
        fan = build_fan((2,) + (1,) * (d - 1))
        for rays in fan.boundary_cones.values():
            assert len(rays) == d - 1
            assert abs(det_exact([r[1:] for r in rays])) == 1


def test_fan_covers_half_space():
    rng = random.Random(7)
    fan = build_fan((5, 2, -3))
    for _ in range(300):
        m = (rng.randint(0, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        hits = [c for c, rays in fan.maximal_cones.items() if all(x >= 0 for x in solve_exact(rays, m))]
        assert hits, m


def test_build_fan_rejects():
    with pytest.raises(InvalidWeight):
        build_fan((0, 1))
    with pytest.raises(InvalidWeight):
        build_fan((2, 4))


def test_alpha_prime_examples():
    dec = alpha_prime((1, 0), (3, 1))
    assert dec.dropped == 2 and dec.a == F(1, 3)
    assert dec.coefficients == ((0, F(1, 3)),) and dec.value == F(2, 3)
    dec = alpha_prime((3, 1), (3, 1))
    assert dec.a == 1 and all(c == 0 for _, c in dec.coefficients) and dec.value == 1
    assert alpha_prime((0, 1), (3, 1)).value == 1
    assert alpha_prime((0, 1, 0), (3, 1, 1)).value == 1


def test_alpha_prime_errors():
    with pytest.raises(ZeroVector):
        alpha_prime((0, 0), (3, 1))
    with pytest.raises(ToricError):
        alpha_prime((-1, 0), (3, 1))


@pytest.mark.parametrize("n, value", [((3, 1), F(2, 3)), ((1, 7), 1), ((2, 3), 1), ((5, 1), F(2, 5))])
def test_mld_prime(backend, n, value):
    report = mld_prime(n)
    assert report.value == value
    if not report.at_generator:
        assert alpha_prime(report.witness, n).value == value


def test_is_elc_prime():
    assert is_elc_prime((3, 1), F(2, 3))
    assert not is_elc_prime((3, 1), 1)
    for k in range(-6, 7):
        assert is_elc_prime((1, k), 1)
        assert is_elc_prime((1, k), F(1, 2))
    with pytest.raises(NonpositiveEpsilon):
        is_elc_prime((3, 1), F(-1, 2))


def test_fiber_multiplicity():
    assert fiber_multiplicity((3, 1)) == 3
    assert fiber_multiplicity((1, 5, -2)) == 1
    assert fiber_multiplicity((10, 11, 19)) == 10


@pytest.mark.parametrize("n", [(3, 1), (4, -1, 3), (5, 2, 2), (1, 3, -7)])
def test_box_has_n1_points_per_cone(n):
    points = list(fibfan.box_points_prime(n))
    per_cone = {}
    for cone, k, m, _ in points:
        per_cone.setdefault(cone, []).append(k)
    assert all(ks == list(range(n[0])) for ks in per_cone.values())
    assert len(per_cone) == len(n)
    assert fiber_multiplicity(n) == len(next(iter(per_cone.values())))


def test_box_candidates_within_oracle_bound():
    for n1 in range(1, 6):
        for tail in itertools.product(range(-5, 6), repeat=2):
            n = (n1,) + tail
            try:
                points = list(fibfan.box_points_prime(n))
            except InvalidWeight:
                continue
            limit = max(abs(x) for x in n) + len(n)
            assert all(abs(x) <= limit for _, _, m, _ in points for x in m[1:])


def test_alpha_prime_permutation_of_tail():
    n, m = (5, 2, -3, 1), (3, 1, 0, -2)
    base = alpha_prime(m, n).value
    for perm in itertools.permutations(range(1, 4)):
        pn = (n[0],) + tuple(n[i] for i in perm)
        pm = (m[0],) + tuple(m[i] for i in perm)
        assert alpha_prime(pm, pn).value == base
