"""Brute-force reference implementations.

Used by the test suite and the CLI ``--verify`` flag only.  Nothing here
calls into ``wblowup``/``fibfan`` decomposition code or the box kernels:
values are carried as integer ``(num, den)`` pairs, cone membership is
decided with integer adjugates, and minima are taken over plain grid
enumeration.  Exponential in ``d`` by design.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import BoundTooSmall, InternalConsistencyError
from .lattice import blowup_weight, fibration_weight
from .wblowup import Decomposition, MldReport
from .fibfan import PrimeDecomposition


def _less(p, q):
    return p[0] * q[1] < q[0] * p[1]


def _same(p, q):
    return p[0] * q[1] == q[0] * p[1]


def _alpha_pair(m, n):
    """(num, den, j) of the blowup log discrepancy, trying every dropped index."""
    d = len(n)
    found = None
    for j in range(d):
        # m = (m_j/n_j) n + sum b_i e_i with n_j b_i = m_i n_j - m_j n_i
        nb = [m[i] * n[j] - m[j] * n[i] for i in range(d) if i != j]
        if min(nb, default=0) < 0:
            continue
        pair = (m[j] + sum(nb), n[j], j + 1)
        if found is None:
            found = pair
        elif not _same(pair, found):
            raise InternalConsistencyError(f"oracle: dropped indices disagree at {m}")
    if found is None:
        raise InternalConsistencyError(f"oracle: no cone contains {m}")
    return found


def alpha_oracle(m, n) -> Fraction:
    num, den, _ = _alpha_pair(tuple(m), tuple(blowup_weight(n)))
    return Fraction(num, den)


def _as_decomposition(m, n, num, den, j):
    a = Fraction(m[j - 1], n[j - 1])
    b = tuple(m[i] - a * n[i] for i in range(len(n)) if i != j - 1)
    return Decomposition(j, a, b, Fraction(num, den))


def mld_bruteforce(n, bound: int) -> MldReport:
    n = tuple(blowup_weight(n))
    if bound < max(n):
        raise BoundTooSmall(f"bound {bound} < max weight {max(n)}")
    best = None
    for m in itertools.product(range(bound + 1), repeat=len(n)):
        if not any(m):
            continue
        num, den, j = _alpha_pair(m, n)
        if best is None or _less((num, den), best[:2]):
            best = (num, den, j, m)
    num, den, j, m = best
    return MldReport(Fraction(num, den), m, _as_decomposition(m, n, num, den, j))


def lct_bruteforce(n, i: int, bound: int) -> Fraction:
    n = tuple(blowup_weight(n))
    if bound < max(n):
        raise BoundTooSmall(f"bound {bound} < max weight {max(n)}")
    if not 1 <= i <= len(n):
        raise IndexError(i)
    best = None
    for m in itertools.product(range(bound + 1), repeat=len(n)):
        if m[i - 1] < 1:
            continue
        num, den, _ = _alpha_pair(m, n)
        ratio = (num, den * m[i - 1])
        if best is None or _less(ratio, best):
            best = ratio
    return Fraction(*best)


def _det(mat):
    """Laplace expansion along the first row; fine for d <= 6."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total = 0
    for c in range(size):
        if mat[0][c]:
            minor = [row[:c] + row[c + 1:] for row in mat[1:]]
            total += (-1) ** c * mat[0][c] * _det(minor)
    return total


def _adjugate(cols):
    """Integer adjugate of the matrix whose columns are ``cols``."""
    size = len(cols)
    mat = [[cols[c][r] for c in range(size)] for r in range(size)]
    adj = [[0] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = [row[:c] + row[c + 1:] for k, row in enumerate(mat) if k != r]
            adj[c][r] = (-1) ** (r + c) * (_det(minor) if minor else 1)
    return adj, _det(mat)


def _fibration_cones(n):
    d = len(n)
    gens = {0: (0,) + (-1,) * (d - 1)}
    for label in range(2, d + 1):
        gens[label] = tuple(1 if i == label - 1 else 0 for i in range(d))
    cones = []
    for dropped in sorted(gens):
        cols = [tuple(n)] + [gens[g] for g in sorted(gens) if g != dropped]
        adj, det = _adjugate(cols)
        if det < 0:
            adj = [[-x for x in row] for row in adj]
            det = -det
        labels = [g for g in sorted(gens) if g != dropped]
        cones.append((dropped, labels, adj, det))
    return cones


def _alpha_prime_pair(m, cones):
    found = None
    for dropped, labels, adj, det in cones:
        coeffs = [sum(a * x for a, x in zip(row, m)) for row in adj]
        if min(coeffs) < 0:
            continue
        pair = (sum(coeffs), det, dropped, labels, coeffs)
        if found is None:
            found = pair
        elif not _same(pair, found):
            raise InternalConsistencyError(f"oracle: cones disagree at {m}")
    if found is None:
        raise InternalConsistencyError(f"oracle: no cone contains {m}")
    return found


def alpha_prime_oracle(m, n) -> Fraction:
    n = tuple(fibration_weight(n))
    num, den, *_ = _alpha_prime_pair(tuple(m), _fibration_cones(n))
    return Fraction(num, den)


def mld_prime_bruteforce(n, bound: int) -> MldReport:
    n = tuple(fibration_weight(n))
    d = len(n)
    needed = max(abs(x) for x in n) + d
    if bound < needed:
        raise BoundTooSmall(f"bound {bound} < max |n_i| + d = {needed}")
    cones = _fibration_cones(n)
    best = None
    rest = range(-bound, bound + 1)
    for m1 in range(n[0] + 1):
        for tail in itertools.product(rest, repeat=d - 1):
            m = (m1,) + tail
            if not any(m):
                continue
            found = _alpha_prime_pair(m, cones)
            if best is None or _less(found[:2], best[0][:2]):
                best = (found, m)
    (num, den, dropped, labels, coeffs), m = best
    dec = PrimeDecomposition(dropped, Fraction(coeffs[0], den),
                             tuple((g, Fraction(c, den)) for g, c in zip(labels, coeffs[1:])),
                             Fraction(num, den))
    return MldReport(Fraction(num, den), m, dec)


def divisor_of_character(u, rays):
    """Coefficients ``<u, v>`` of the principal divisor of ``chi^u`` on each ray."""
    return [sum(a * b for a, b in zip(u, v)) for v in rays]


def pullback_mult_oracle(n, i: int) -> int:
    """Coefficient of the exceptional ray in ``div(chi^{e_i})``."""
    n = tuple(blowup_weight(n))
    u = tuple(1 if k == i - 1 else 0 for k in range(len(n)))
    return divisor_of_character(u, [n])[0]


def fiber_multiplicity_oracle(n) -> int:
    """Coefficient of ``T`` in the pullback of the coordinate of ``A^1``."""
    n = tuple(fibration_weight(n))
    u = (1,) + (0,) * (len(n) - 1)
    rays = [n, (0,) + (-1,) * (len(n) - 1)] + [
        tuple(1 if k == g else 0 for k in range(len(n))) for g in range(1, len(n))]
    coeffs = divisor_of_character(u, rays)
    if any(coeffs[1:]):
        raise InternalConsistencyError("oracle: the coordinate of A^1 vanishes on a horizontal ray")
    return coeffs[0]


def relative_class_oracle(c_t: int, c, n) -> int:
    """Find ``r`` with ``c_t*T + sum c_i H_i~ - r*T`` principal, by search.

    Every character ``u`` with entries in ``[-S, S]``, ``S = max |c_i|``, is
    tried; a character whose divisor matches ``c`` on the rays ``e_i``
    leaves ``r`` as the remaining ``T`` coefficient.  Exactly one must fit.
    """
    n = tuple(blowup_weight(n))
    d = len(n)
    if len(c) != d:
        raise InternalConsistencyError("oracle: coefficient length mismatch")
    rays = [tuple(1 if k == i else 0 for k in range(d)) for i in range(d)] + [n]
    span = max((abs(x) for x in c), default=0)
    hits = []
    for u in itertools.product(range(-span, span + 1), repeat=d):
        div = divisor_of_character(u, rays)
        if div[:d] == list(c):
            hits.append(c_t - div[d])
    if len(hits) != 1:
        raise InternalConsistencyError(f"oracle: {len(hits)} characters fit")
    return hits[0]
