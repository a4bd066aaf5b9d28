"""The toric fibration ``X -> A^1`` built from a single weight vector.

The rays ``e_2, ..., e_d``, ``u_0 = -(e_2 + ... + e_d)`` and ``n`` span a
fan whose support is the half-space ``m_1 >= 0``.  The rays other than ``n``
give the complete fan of projective space inside ``m_1 = 0`` (the boundary
cones, all unimodular); each maximal cone is ``n`` joined with one boundary
cone.  Generators are labelled ``0`` for ``u_0`` and ``i`` for ``e_i``
(``2 <= i <= d``); a cone is named by the label of the generator it drops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from . import kernels
from .errors import DimensionMismatch, InternalConsistencyError, OutsideSupport, ToricError, ZeroVector
from .lattice import LatticeVector, WeightVector, det_exact, fibration_weight, positive_epsilon, solve_exact, vector
from .wblowup import GENERATOR, MldReport


def generator_labels(d: int) -> List[int]:
    return [0] + list(range(2, d + 1))


def generator(label: int, d: int) -> LatticeVector:
    if label == 0:
        return (0,) + (-1,) * (d - 1)
    return tuple(1 if i == label - 1 else 0 for i in range(d))


def boundary_generators(dropped: int, d: int) -> List[int]:
    return [g for g in generator_labels(d) if g != dropped]


@dataclass(frozen=True)
class FibrationFan:
    weight: WeightVector
    maximal_cones: Dict[int, Tuple[LatticeVector, ...]]
    boundary_cones: Dict[int, Tuple[LatticeVector, ...]]
    determinants: Dict[int, int]

    @property
    def d(self) -> int:
        return self.weight.d


def build_fan(n) -> FibrationFan:
    n = fibration_weight(n)
    d = n.d
    maximal, boundary, dets = {}, {}, {}
    for dropped in generator_labels(d):
        rays = tuple(generator(g, d) for g in boundary_generators(dropped, d))
        boundary[dropped] = rays
        maximal[dropped] = (n.entries,) + rays
        det = det_exact(maximal[dropped])
        if abs(det) != n[0]:
            raise InternalConsistencyError(f"cone dropping {dropped} has determinant {det}, expected ±{n[0]}")
        dets[dropped] = det
    return FibrationFan(n, maximal, boundary, dets)


@dataclass(frozen=True)
class PrimeDecomposition:
    """``m = a*n + sum coefficients[g] * generator(g)`` over the kept generators."""

    dropped: int
    a: Fraction
    coefficients: Tuple[Tuple[int, Fraction], ...]
    value: Fraction

    def recompose(self, n) -> LatticeVector:
        d = len(n)
        vals = [self.a * w for w in n]
        for label, coeff in self.coefficients:
            g = generator(label, d)
            vals = [v + coeff * x for v, x in zip(vals, g)]
        if any(v.denominator != 1 for v in vals):
            raise InternalConsistencyError(f"{self} does not recompose to a lattice point")
        return tuple(int(v) for v in vals)


def alpha_prime(m, n) -> PrimeDecomposition:
    """Decompose ``m`` in every maximal cone containing it; all must agree."""
    n = fibration_weight(n)
    m = vector(m)
    if len(m) != n.d:
        raise DimensionMismatch(f"point has length {len(m)}, weights have length {n.d}")
    if not any(m):
        raise ZeroVector("the zero vector has no log discrepancy")
    if m[0] < 0:
        raise ToricError("first entry must be ≥ 0 (support of the fibration fan)")
    fan = build_fan(n)
    chosen = None
    for dropped, rays in fan.maximal_cones.items():
        sol = solve_exact(rays, m)
        if sol is None:
            raise InternalConsistencyError(f"cone dropping {dropped} is degenerate")
        if any(x < 0 for x in sol):
            continue
        labels = boundary_generators(dropped, n.d)
        dec = PrimeDecomposition(dropped, sol[0], tuple(zip(labels, sol[1:])), sum(sol))
        if chosen is None:
            chosen = dec
        elif dec.value != chosen.value:
            raise InternalConsistencyError(
                f"cones {chosen.dropped} and {dropped} disagree at {m}: {chosen.value} != {dec.value}")
    if chosen is None:
        raise OutsideSupport(f"no maximal cone contains {m}")
    return chosen


def _box_witness(n: WeightVector, label: int, k: int) -> LatticeVector:
    big_n, d = n[0], n.d
    rem = [(k * x) % big_n for x in n]
    if label == 0:
        coeffs = {i: (-rem[i]) % big_n for i in range(1, d)}
        rest = [(k * n[i] + coeffs[i]) // big_n for i in range(1, d)]
    else:
        t = label - 1
        b0 = rem[t]
        rest = []
        for i in range(1, d):
            if i == t:
                rest.append((k * n[i] - b0) // big_n)
            else:
                rest.append((k * n[i] - b0 + (rem[t] - rem[i]) % big_n) // big_n)
    return (k,) + tuple(rest)


def box_points_prime(n) -> Iterator[Tuple[int, int, LatticeVector, Fraction]]:
    """Yield ``(cone, k, m, value)`` for every half-open-box point, ``k = 0`` included.

    Reference path, one exact solve per point; the box of each cone has
    exactly ``n_1`` lattice points.
    """
    n = fibration_weight(n)
    fan = build_fan(n)
    for dropped, rays in fan.maximal_cones.items():
        for k in range(n[0]):
            m = _box_witness(n, dropped, k) if k else (0,) * n.d
            sol = solve_exact(rays, m)
            if sol is None or sol[0] != Fraction(k, n[0]) or not all(0 <= x < 1 for x in sol):
                raise InternalConsistencyError(f"{m} is not a box point of cone {dropped}")
            yield dropped, k, m, sum(sol)


def mld_prime(n) -> MldReport:
    n = fibration_weight(n)
    found = kernels.box_min_fibration(n.entries)
    if found is not None:
        num, den, label, k = found
        value = Fraction(num, den)
        if value <= 1:
            witness = _box_witness(n, label, k)
            dec = alpha_prime(witness, n)
            if dec.value != value:
                raise InternalConsistencyError(
                    f"kernel value {value} disagrees with decomposition {dec.value} at {witness}")
            return MldReport(value, witness, dec)
    return MldReport(Fraction(1), GENERATOR, alpha_prime(n.entries, n))


def is_elc_prime(n, eps) -> bool:
    eps = positive_epsilon(eps)
    return mld_prime(n).value >= eps


def fiber_multiplicity(n) -> int:
    """Multiplicity of the reduced fibre ``T`` in ``f^*0``; the first weight."""
    return fibration_weight(n)[0]
