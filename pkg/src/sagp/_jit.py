"""JIT shim: numba when available, plain Python otherwise.

All hot kernels in this package are written as straight loops that are valid
both compiled and interpreted, so NUMBA_DISABLE_JIT=1 (or a missing numba)
only costs speed, never correctness.
"""

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(func):
            return func

        return deco


def jit(func=None):
    """Default kernel decorator: nopython + on-disk cache."""
    if func is not None:
        return njit(cache=True)(func)
    return njit(cache=True)
