"""Optional numba acceleration.

Set ``QDSD_DISABLE_JIT=1`` to run every kernel as plain Python over numpy
arrays. The decorated functions keep the same signatures either way.
"""

import os

JIT_DISABLED = os.environ.get("QDSD_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and not JIT_DISABLED


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, otherwise the identity decorator."""
    if NUMBA_ENABLED:
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda fn: fn


def python_impl(fn):
    """Undecorated body of a kernel; helpers it calls stay compiled."""
    return getattr(fn, "py_func", fn)
