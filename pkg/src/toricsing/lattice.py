"""Exact integer/rational substrate: vectors, gcd, primitivity, small exact solves.

Rationals are :class:`fractions.Fraction` throughout; they are stored reduced
with a positive denominator and compare by cross-multiplication, so no float
ever enters a computation path.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatch, InvalidWeight, NonpositiveEpsilon, ToricError

Rational = Fraction
LatticeVector = Tuple[int, ...]

BLOWUP = "blowup"
FIBRATION = "fibration"

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def vector(entries: Iterable[int]) -> LatticeVector:
    """Coerce to a tuple of Python ints, rejecting bools, floats and empties."""
    out = []
    for x in entries:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ToricError(f"lattice entries must be integers, got {x!r}")
        out.append(int(x))
    if not out:
        raise DimensionMismatch("vectors must have length d >= 1")
    return tuple(out)


def gcd_vector(v: Sequence[int]) -> int:
    return math.gcd(*v) if len(v) > 1 else abs(v[0])


def is_primitive(v: Sequence[int]) -> bool:
    return gcd_vector(v) == 1


@dataclass(frozen=True)
class WeightVector:
    """A primitive weight vector ``(n_1, ..., n_d)`` tagged with its mode.

    In ``blowup`` mode every entry is at least 1.  In ``fibration`` mode only
    the first entry is constrained (``n_1 >= 1``); the rest are any integers.
    """

    entries: LatticeVector
    mode: str = BLOWUP

    def __post_init__(self):
        entries = vector(self.entries)
        object.__setattr__(self, "entries", entries)
        if self.mode == BLOWUP:
            if min(entries) < 1:
                raise InvalidWeight("weights must be ≥ 1 in blowup mode")
        elif self.mode == FIBRATION:
            if len(entries) < 2:
                raise InvalidWeight("fibration weights need d ≥ 2")
            if entries[0] < 1:
                raise InvalidWeight("first weight must be ≥ 1 in fibration mode")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not is_primitive(entries):
            raise InvalidWeight(f"weight vector {entries} is not primitive")

    @property
    def d(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def blowup_weight(n) -> WeightVector:
    if isinstance(n, WeightVector):
        if n.mode != BLOWUP:
            raise InvalidWeight("expected a blowup-mode weight vector")
        return n
    return WeightVector(tuple(n), BLOWUP)


def fibration_weight(n) -> WeightVector:
    if isinstance(n, WeightVector):
        if n.mode != FIBRATION:
            raise InvalidWeight("expected a fibration-mode weight vector")
        return n
    return WeightVector(tuple(n), FIBRATION)


def parse_vector(text: str) -> LatticeVector:
    """Parse ``"1,-2,3"``; whitespace anywhere in the list is rejected."""
    parts = text.split(",")
    if not all(_INT_RE.match(p) for p in parts):
        raise ToricError(f"expected comma-separated integers without spaces, got {text!r}")
    return tuple(int(p) for p in parts)


def parse_rational(text: str) -> Fraction:
    """Parse an exact ``p/q`` or integer string.  Decimals are refused."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ToricError(f"expected an exact fraction p/q or an integer, got {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ToricError("zero denominator")
    return Fraction(int(num), int(den) if den is not None else 1)


def positive_epsilon(eps) -> Fraction:
    if isinstance(eps, float):
        raise ToricError("epsilon must be exact (int or Fraction), not float")
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveEpsilon(f"epsilon must be > 0, got {eps}")
    return eps


def det_exact(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    size = len(a)
    sign, prev = 1, 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        for r in range(c + 1, size):
            for k in range(c + 1, size):
                a[r][k] = (a[r][k] * a[c][c] - a[r][c] * a[c][k]) // prev
        prev = a[c][c]
    return sign * a[-1][-1]


def solve_exact(columns: Sequence[Sequence[int]], rhs: Sequence[int]):
    """Solve ``sum_k x_k * columns[k] = rhs`` over the rationals.

    Returns the list of coefficients, or ``None`` when the columns are
    linearly dependent.
    """
    size = len(rhs)
    if len(columns) != size or any(len(col) != size for col in columns):
        raise DimensionMismatch("solve_exact needs a square system")
    aug = [[Fraction(columns[k][r]) for k in range(size)] + [Fraction(rhs[r])] for r in range(size)]
    for c in range(size):
        pivot = next((r for r in range(c, size) if aug[r][c] != 0), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                factor = aug[r][c]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[c])]
    return [aug[r][size] for r in range(size)]
