"""Backend selection for the box-minimum kernels.

The compiled extension is used when it imported and the input is small
enough for 64-bit arithmetic; everything else goes to the pure-Python twin,
which works on arbitrary-precision ints.
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None

_SAFE_ENTRY = 1 << 28
_SAFE_DIM = 64

_backend = "compiled" if COMPILED_AVAILABLE else "python"


def get_backend():
    return _backend


def set_backend(name):
    """Force ``"python"`` or ``"compiled"`` (for benchmarks and twin tests)."""
    global _backend
    if name not in ("python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not COMPILED_AVAILABLE:
        raise RuntimeError("compiled kernels are not built")
    _backend = name


def _fits(n):
    return len(n) <= _SAFE_DIM and all(-_SAFE_ENTRY < x < _SAFE_ENTRY for x in n)


def _impl(n):
    if _backend == "compiled" and _fits(n):
        return _compiled
    return _kernels_py


def box_min_blowup(n):
    return _impl(n).box_min_blowup(tuple(n))


def box_min_fibration(n):
    return _impl(n).box_min_fibration(tuple(n))
