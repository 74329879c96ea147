"""Kernel backend selection.

Hot loops are written once and compiled with numba when it is importable.
Setting ``ZAGRAPH_DISABLE_NUMBA=1`` forces the pure Python / numpy path,
which is what the benchmark compares against.
"""
import os

_DISABLED = os.environ.get("ZAGRAPH_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    import numba

    USE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    USE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity decorator otherwise."""
    if USE_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda fn: fn


def backend() -> str:
    return "numba" if USE_NUMBA else "python"
