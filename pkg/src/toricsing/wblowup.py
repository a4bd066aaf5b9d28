"""Log discrepancies on the weighted blowup of affine space.

The weighted blowup ``X -> A^d`` with weights ``n`` is the star subdivision
of the positive orthant at the ray ``n``.  Its maximal cones are
``sigma_j = cone(n, e_i : i != j)``, one per coordinate ``j``, and
``sigma_j`` has index ``n_j``.  A lattice point ``m`` in ``sigma_j`` is
written ``m = a*n + sum_{i != j} b_i e_i`` with ``a = m_j / n_j``; its log
discrepancy is ``a + sum b_i``.  Here ``a`` is also the order of the
exceptional divisor ``T`` along ``m`` and ``b_i`` the order of the strict
transform of the hyperplane ``{t_i = 0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple, Union

from . import kernels
from .errors import DimensionMismatch, IndexOutOfRange, InternalConsistencyError, ToricError, ZeroVector
from .lattice import LatticeVector, WeightVector, blowup_weight, positive_epsilon, vector

GENERATOR = "generator"


@dataclass(frozen=True)
class Decomposition:
    """``m = a*n + sum_{i != j} b_i e_i`` with the dropped index ``j`` (1-based).

    ``b`` is stored in coordinate order with position ``j`` omitted.
    """

    j: int
    a: Fraction
    b: Tuple[Fraction, ...]
    value: Fraction

    def b_full(self) -> Tuple[Fraction, ...]:
        """The b-coefficients padded with 0 at the dropped position."""
        out = list(self.b)
        out.insert(self.j - 1, Fraction(0))
        return tuple(out)

    def recompose(self, n) -> LatticeVector:
        vals = [self.a * w + b for w, b in zip(n, self.b_full())]
        if any(v.denominator != 1 for v in vals):
            raise InternalConsistencyError(f"decomposition {self} does not recompose to a lattice point")
        return tuple(int(v) for v in vals)


@dataclass(frozen=True)
class MldReport:
    """Minimal log discrepancy with a witness.

    ``witness`` is a lattice point attaining ``value``, or :data:`GENERATOR`
    when the minimum 1 is attained only at ray generators.  In that case
    ``decomposition`` is the one of the inserted ray ``n`` itself.
    """

    value: Fraction
    witness: Union[LatticeVector, str]
    decomposition: object

    @property
    def at_generator(self) -> bool:
        return self.witness == GENERATOR


def _check_point(m, d) -> LatticeVector:
    m = vector(m)
    if len(m) != d:
        raise DimensionMismatch(f"point has length {len(m)}, weights have length {d}")
    if any(x < 0 for x in m):
        raise ToricError("point entries must be ≥ 0 for the blowup fan")
    if not any(m):
        raise ZeroVector("the zero vector has no log discrepancy")
    return m


def decompose(m, n) -> Decomposition:
    n = blowup_weight(n)
    m = _check_point(m, n.d)
    chosen = None
    for j in range(n.d):
        a = Fraction(m[j], n[j])
        b = tuple(m[i] - a * n[i] for i in range(n.d) if i != j)
        if any(x < 0 for x in b):
            continue
        dec = Decomposition(j + 1, a, b, a + sum(b))
        if chosen is None:
            chosen = dec
        elif dec.value != chosen.value:
            raise InternalConsistencyError(
                f"cones {chosen.j} and {dec.j} disagree at {m}: {chosen.value} != {dec.value}")
    if chosen is None:
        raise InternalConsistencyError(f"no cone of the blowup fan contains {m}")
    return chosen


def alpha(m, n) -> Fraction:
    return decompose(m, n).value


def box_points(n) -> Iterator[Tuple[int, int, LatticeVector, Decomposition]]:
    """Yield ``(j, k, m, decomposition)`` for every nonzero half-open-box point.

    Slow reference path; :func:`mld` uses the kernels.  Each candidate is
    verified by integrality and recomposition before it is yielded.
    """
    n = blowup_weight(n)
    for j in range(n.d):
        nj = n[j]
        for k in range(1, nj):
            a = Fraction(k, nj)
            m = tuple(k if i == j else -((-k * n[i]) // nj) for i in range(n.d))
            b = tuple(m[i] - a * n[i] for i in range(n.d) if i != j)
            if not all(0 <= x < 1 for x in b):
                raise InternalConsistencyError(f"box point {m} of cone {j + 1} has b outside [0, 1)")
            dec = Decomposition(j + 1, a, b, a + sum(b))
            if dec.recompose(n.entries) != m:
                raise InternalConsistencyError(f"box point {m} of cone {j + 1} fails recomposition")
            yield j + 1, k, m, dec


def _box_witness(n: WeightVector, j: int, k: int) -> LatticeVector:
    nj = n[j - 1]
    return tuple(k if i == j - 1 else -((-k * n[i]) // nj) for i in range(n.d))


def mld(n) -> MldReport:
    n = blowup_weight(n)
    found = kernels.box_min_blowup(n.entries)
    if found is not None:
        num, den, j, k = found
        value = Fraction(num, den)
        if value <= 1:
            witness = _box_witness(n, j, k)
            dec = decompose(witness, n)
            if dec.value != value:
                raise InternalConsistencyError(
                    f"kernel value {value} disagrees with decomposition {dec.value} at {witness}")
            return MldReport(value, witness, dec)
    return MldReport(Fraction(1), GENERATOR, decompose(n.entries, n))


def is_elc(n, eps) -> bool:
    eps = positive_epsilon(eps)
    return mld(n).value >= eps


def _index(n: WeightVector, i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n.d:
        raise IndexOutOfRange(f"index {i!r} outside 1..{n.d}")
    return i - 1


def lct_hyperplane(n, i: int) -> Fraction:
    """lc threshold of ``(X, f^*H_i)``.

    Log discrepancy minus ``c`` times the order of ``f^*H_i`` is linear on
    each maximal cone, so nonnegativity is decided on the rays: ``e_k`` has
    log discrepancy 1 and order ``delta_ik``, the ray ``n`` has log
    discrepancy 1 and order ``n_i``.  The binding ray is ``n``.
    """
    n = blowup_weight(n)
    return Fraction(1, n[_index(n, i)])


def pullback_mult(n, i: int) -> int:
    """Coefficient of the exceptional divisor in ``f^*H_i``."""
    n = blowup_weight(n)
    return n[_index(n, i)]


def relative_class(c_t: int, c, n) -> int:
    """Class of ``c_t*T + sum c_i H_i~`` in Cl(X) relative to ``A^d``.

    The character ``u`` has divisor ``sum u_i H_i~ + <u, n> T``, so
    ``H_i~ ~ -n_i T`` and the relative class group is generated by ``T``.
    """
    n = blowup_weight(n)
    c = vector(c)
    if len(c) != n.d:
        raise DimensionMismatch(f"coefficient vector has length {len(c)}, weights have length {n.d}")
    if isinstance(c_t, bool) or not isinstance(c_t, int):
        raise ToricError("coefficient of T must be an integer")
    return c_t - sum(ci * ni for ci, ni in zip(c, n))
