"""Exact toric singularity invariants built from a single weight vector.

Weighted blowups of affine space (:mod:`toricsing.wblowup`), the toric
fibration to the affine line (:mod:`toricsing.fibfan`), brute-force oracles
(:mod:`toricsing.oracle`) and exhaustive scans (:mod:`toricsing.explorer`).
"""

from .errors import (
    BoundTooSmall,
    CorruptCheckpoint,
    DimensionMismatch,
    IndexOutOfRange,
    InternalConsistencyError,
    InvalidBound,
    InvalidWeight,
    NonpositiveEpsilon,
    OutsideSupport,
    ToricError,
    ZeroVector,
)
from .fibfan import alpha_prime, build_fan, fiber_multiplicity, is_elc_prime, mld_prime
from .lattice import BLOWUP, FIBRATION, WeightVector, gcd_vector, is_primitive
from .wblowup import alpha, decompose, is_elc, lct_hyperplane, mld, pullback_mult, relative_class

__version__ = "0.1.0"
